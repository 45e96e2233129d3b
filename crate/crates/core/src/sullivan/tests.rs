use super::*;
use crate::gca::{Gca, Generator, Mono, Poly, WeightSel};
use crate::rational::q;

fn gen_counts(m: &SullivanAlgebra, top: u32) -> Vec<usize> {
    m.degree_counts(top)
}

#[test]
fn sphere_minimal_model() {
    let a = CdgaPresentation::sphere(2);
    a.validate().unwrap();
    let m = minimal_model(&a, 6, None).unwrap();
    assert_eq!(gen_counts(&m.alg, 6), vec![0, 0, 1, 1, 0, 0, 0]);
    let e = Poly::gen(0);
    let df = &m.alg.d.values[1];
    assert_eq!(*df, m.alg.gca.mul(&e, &e).scale(&df.terms.values().next().unwrap().clone()));
    assert!(check_quasi_iso(&m, &a, None).unwrap());
}

#[test]
fn product_of_spheres_model_cohomology() {
    let a = CdgaPresentation::sphere_product(2, 2);
    a.validate().unwrap();
    let m = minimal_model(&a, 6, None).unwrap();
    assert!(m.alg.is_minimal());
    assert_eq!(m.alg.cohomology_dims(5, None).unwrap(), vec![1, 0, 2, 0, 1, 0]);
    assert!(check_quasi_iso(&m, &a, None).unwrap());
}

#[test]
fn cp2_model() {
    let a = CdgaPresentation::truncated_poly(2, 2);
    a.validate().unwrap();
    let m = minimal_model(&a, 8, None).unwrap();
    assert_eq!(gen_counts(&m.alg, 8), vec![0, 0, 1, 0, 0, 1, 0, 0, 0]);
}

#[test]
fn torus_needs_no_degree_zero() {
    let mut t = CdgaPresentation::sphere_product(1, 1);
    t.set_weights(vec![0, 1, 1, 2]);
    let m = minimal_model(&t, 3, Some(4)).unwrap();
    assert_eq!(m.alg.len(), 2);
}

#[test]
fn wedge_of_two_circles_quadratic_model() {
    let qm = quadratic_model(&SphereClass::wedge(&[1, 1]), 1, Some(5)).unwrap();
    assert_eq!(qm.alg.weight_counts(1, 5), vec![0, 2, 1, 2, 3, 6]);
    assert!(qm.alg.is_quadratic());
    qm.alg.check_square_zero().unwrap();
}

#[test]
fn quadratic_model_matches_minimal_model() {
    let w = CdgaPresentation::wedge(&CdgaPresentation::sphere(2), &CdgaPresentation::sphere(2));
    let m = minimal_model(&w, 6, None).unwrap();
    let qm = quadratic_model(&SphereClass::wedge(&[2, 2]), 6, None).unwrap();
    assert_eq!(gen_counts(&m.alg, 6), gen_counts(&qm.alg, 6));
    assert_eq!(qm.alg.cohomology_dims(6, None).unwrap(), vec![1, 0, 2, 0, 0, 0, 0]);
}

#[test]
fn sphere_closure() {
    let qm = quadratic_model(&SphereClass::wedge(&[2]), 3, None).unwrap();
    let c = acyclic_closure(&qm.alg).unwrap();
    let u1 = c.u(0);
    let u2 = c.u(1);
    assert_eq!(c.alg.gen(u1).degree, 1);
    assert_eq!(c.alg.gen(u2).degree, 2);
    let expected = Poly::gen(1).sub(&c.alg.gca.mul(&Poly::gen(u1), &Poly::gen(0)));
    assert_eq!(c.alg.d.values[u2], expected);
    c.alg.check_square_zero().unwrap();
    assert_eq!(c.alg.cohomology_dims(4, None).unwrap(), vec![1, 0, 0, 0, 0]);
}

#[test]
fn product_closure_dims() {
    let a = CdgaPresentation::sphere_product(2, 2);
    let m = minimal_model(&a, 6, None).unwrap();
    let c = acyclic_closure(&m.alg).unwrap();
    assert_eq!(c.u_dims(4, WeightSel::Any).unwrap(), vec![1, 2, 3, 4, 5]);
    assert_eq!(c.alg.cohomology_dims(5, None).unwrap(), vec![1, 0, 0, 0, 0, 0]);
}

#[test]
fn circle_closure_is_acyclic_by_weight() {
    let qm = quadratic_model(&SphereClass::wedge(&[1, 1]), 1, Some(3)).unwrap();
    let c = acyclic_closure(&qm.alg).unwrap();
    for w in 1..=3 {
        for k in 0..=2 {
            assert_eq!(c.alg.cohomology_block(k, w).unwrap(), 0, "block ({k}, {w})");
        }
    }
}

#[test]
fn split_identity() {
    let qm = quadratic_model(&SphereClass::wedge(&[2, 3]), 6, None).unwrap();
    let id = CdgaMorphism { values: (0..qm.alg.len()).map(Poly::gen).collect() };
    match extension_split(&qm.alg, &qm.alg, &id, 6).unwrap() {
        SplitOutcome::Split(s) => assert!(s.z.is_empty()),
        SplitOutcome::Failure(f) => panic!("unexpected failure {f:?}"),
    }
}

#[test]
fn split_torus_into_circles() {
    let t = SullivanAlgebra::new(Gca::graded(vec![Generator::weighted("x", 1, 1), Generator::weighted("y", 1, 1)]));
    let qm = quadratic_model(&SphereClass::wedge(&[1, 1]), 1, Some(4)).unwrap();
    let lam = CdgaMorphism { values: vec![Poly::gen(0), Poly::gen(1)] };
    lam.check_chain_map(&t, &qm.alg).unwrap();
    let stages = qm.alg.stages();
    match extension_split(&t, &qm.alg, &lam, 1).unwrap() {
        SplitOutcome::Split(s) => {
            let expect: Vec<usize> = (0..qm.alg.len()).filter(|&i| stages[i] >= 1).collect();
            assert_eq!(s.z, expect);
            s.quotient.check_square_zero().unwrap();
        }
        SplitOutcome::Failure(f) => panic!("unexpected failure {f:?}"),
    }
}

#[test]
fn split_cp2_fails_in_degree_five() {
    let mut v = SullivanAlgebra::new(Gca::new(vec![Generator::new("a", 2)]));
    v.push(Generator::new("c", 5), Poly::mono(Mono(vec![(0, 3)]), q(1)));
    let mut w = SullivanAlgebra::new(Gca::new(vec![Generator::new("e", 2)]));
    w.push(Generator::new("f", 3), Poly::mono(Mono(vec![(0, 2)]), q(1)));
    let ef = w.gca.mul(&Poly::gen(0), &Poly::gen(1));
    let lam = CdgaMorphism { values: vec![Poly::gen(0), ef] };
    lam.check_chain_map(&v, &w).unwrap();
    match extension_split(&v, &w, &lam, 6).unwrap() {
        SplitOutcome::Failure(f) => {
            assert_eq!(f.degree, 5);
            assert_eq!(f.kernel.len(), 1);
            assert_eq!(f.kernel[0].0, "c");
        }
        SplitOutcome::Split(_) => panic!("expected failure"),
    }
}

#[test]
fn hopf_cone_has_cp2_cohomology() {
    let qm = quadratic_model(&SphereClass::wedge(&[2]), 5, None).unwrap();
    let t = Truncated::new(&qm.alg, 7, WeightSel::Any).unwrap();
    let cone = Truncated::new(&qm.alg, 7, WeightSel::Any).unwrap().with_cone(3, 2, vec![q(0), q(1)]);
    let mut c0 = CdgaCache::new(&t);
    let mut c1 = CdgaCache::new(&cone);
    assert_eq!(c0.h_dim(2, 1), 1);
    assert_eq!(c0.h_dim(4, 2), 0);
    assert_eq!(c1.h_dim(2, 1), 1);
    assert_eq!(c1.h_dim(3, 2), 0);
    assert_eq!(c1.h_dim(4, 2), 1);
    let m = minimal_model(&cone, 5, None).unwrap();
    assert_eq!(m.alg.degree_counts(5), vec![0, 0, 1, 0, 0, 1]);
}

#[test]
fn presentation_rejects_bad_leibniz() {
    let mut p = CdgaPresentation::new();
    let x = p.add_basis("x", 1);
    let y = p.add_basis("y", 2);
    p.set_diff(x, vec![(y, q(1))]);
    p.set_product(x, x, vec![]);
    let z = p.add_basis("z", 3);
    p.set_product(x, y, vec![(z, q(1))]);
    let w = p.add_basis("w", 4);
    p.set_product(y, y, vec![(w, q(1))]);
    assert!(p.validate().is_err());
}
