use crate::gca::WeightSel;
use crate::sullivan::{quadratic_model, SphereClass, SullivanAlgebra};
use crate::Caps;

use super::*;

fn wedge(degrees: &[u32], cap: u32) -> SullivanAlgebra {
    quadratic_model(&SphereClass::wedge(degrees), cap, None).unwrap().alg
}

#[test]
fn top_cell_of_product_is_inert() {
    let caps = Caps::new(8, 6);
    let w = wedge(&[2, 2], caps.max_degree + SLACK);
    let t = attach_trace(&w, 3, &ClassSpec::lie("[x1,x2]"), None).unwrap();
    let a = inertness_analysis(&t, caps).unwrap();
    let v = &a.verdict;
    assert!(v.inert(), "{v:?}");
    assert!(v.failed_checks().is_empty(), "{:?}", v.failed_checks());
    let table = fiber_dimension_table(v).unwrap();
    assert_eq!(&table.fiber_dims(6)[2..6], &[1, 2, 3, 4]);
    assert_eq!(table.fiber_dims(8), table.closure_dims(8));
}

#[test]
fn cone_on_product_class_has_product_cohomology() {
    let w = wedge(&[2, 2], 10);
    let t = attach_trace(&w, 3, &ClassSpec::lie("[x1,x2]"), None).unwrap();
    let c = cone_cdga(&t).unwrap();
    assert_eq!(c.cohomology_dims(5, WeightSel::Any).unwrap(), vec![1, 0, 2, 0, 1, 0]);
}

#[test]
fn hopf_attachment_is_not_inert() {
    let caps = Caps::new(8, 6);
    let w = wedge(&[2], caps.max_degree + SLACK);
    let t = attach_trace(&w, 3, &ClassSpec::lie("1/2 [x1,x1]"), None).unwrap();
    assert_eq!(t.values.iter().filter(|c| !num_traits::Zero::is_zero(*c)).count(), 1);
    let a = inertness_analysis(&t, caps).unwrap();
    let v = &a.verdict;
    assert_eq!(v.status, Status::NotInert);
    assert_eq!(v.witness.as_ref().unwrap().degree, 5);
    assert!(v.failed_checks().is_empty(), "{:?}", v.failed_checks());
}

#[test]
fn disc_on_a_point() {
    let caps = Caps::new(8, 6);
    let t = AttachTrace::zero(SullivanAlgebra::empty(true), 2);
    let a = inertness_analysis(&t, caps).unwrap();
    let v = &a.verdict;
    assert_eq!(v.status, Status::NotInert);
    let dims = fiber_dimension_table(v).unwrap().fiber_dims(8);
    assert_eq!(dims, vec![0, 1, 0, 1, 0, 1, 0, 1]);
    assert!(v.failed_checks().is_empty(), "{:?}", v.failed_checks());
}

#[test]
fn zero_class_is_not_inert() {
    let caps = Caps::new(6, 6);
    let w = wedge(&[2], caps.max_degree + SLACK);
    let t = attach_trace(&w, 2, &ClassSpec::Zero, None).unwrap();
    let v = inertness_analysis(&t, caps).unwrap().verdict;
    assert_eq!(v.status, Status::NotInert);
    assert!(v.failed_checks().is_empty(), "{:?}", v.failed_checks());
}

#[test]
fn product_of_spheres_top_cell() {
    let caps = Caps::new(8, 6);
    let pd = pd_complex_model(&crate::sullivan::CdgaPresentation::sphere_product(2, 2)).unwrap();
    assert_eq!(pd.n, 3);
    assert_eq!(pd.generators, 2);
    assert_eq!(pd.b.betti(), vec![1, 0, 2, 0, 0]);
    let t = pd_trace(&pd, caps).unwrap();
    let c = cone_cdga(&t).unwrap();
    assert_eq!(c.cohomology_dims(5, WeightSel::Any).unwrap(), vec![1, 0, 2, 0, 1, 0]);
    let v = inertness_analysis(&t, caps).unwrap().verdict;
    assert!(v.inert());
    assert!(v.failed_checks().is_empty(), "{:?}", v.failed_checks());
    assert_eq!(&fiber_dimension_table(&v).unwrap().fiber_dims(6)[2..6], &[1, 2, 3, 4]);
}

#[test]
fn projective_plane_needs_two_generators() {
    let caps = Caps::new(8, 6);
    let pd = pd_complex_model(&cp_cohomology(2)).unwrap();
    assert!(pd.single_generator());
    let t = pd_trace(&pd, caps).unwrap();
    let v = inertness_analysis(&t, caps).unwrap().verdict;
    assert_eq!(v.status, Status::NotInert);
    assert_eq!(v.witness.as_ref().unwrap().degree, 5);
}

#[test]
fn degenerate_pairing_is_rejected() {
    let h = crate::sullivan::CdgaPresentation::trivial(&[("a", 2), ("b", 4)]);
    assert!(matches!(validate_pd(&h), Err(crate::Error::Hypothesis(_))));
}

#[test]
fn lemma2_on_torus() {
    let pd = pd_complex_model(&torus_cohomology(2)).unwrap();
    assert!(pd.is_surface());
    let r = lemma2_check(&pd, Caps::new(8, 6)).unwrap();
    assert!(r.holds, "{:?}", r.blocks);
    assert!(r.cycles > 0);
    assert!(r.cycle_products_exact);
}

#[test]
fn lemma2_on_genus_two() {
    let pd = pd_complex_model(&surface_cohomology(2)).unwrap();
    assert_eq!(pd.genus(), Some(2));
    let r = lemma2_check(&pd, Caps::new(8, 4)).unwrap();
    assert!(r.holds, "{:?}", r.blocks);
    assert!(r.cycle_products_exact);
}

#[test]
fn lemma2_on_three_torus() {
    let pd = pd_complex_model(&torus_cohomology(3)).unwrap();
    assert_eq!(pd.n, 2);
    let r = lemma2_check(&pd, Caps::new(6, 4)).unwrap();
    assert!(r.holds, "{:?}", r.blocks);
    assert!(r.cycle_products_exact);
}

#[test]
fn lemma2_needs_a_degree_one_cycle() {
    let pd = pd_complex_model(&crate::sullivan::CdgaPresentation::sphere_product(2, 2)).unwrap();
    assert!(matches!(lemma2_check(&pd, Caps::new(8, 6)), Err(crate::Error::Hypothesis(_))));
}

#[test]
fn wedge_of_two_spheres() {
    let s2 = crate::sullivan::CdgaPresentation::sphere(2);
    let r = wedge_fiber_check(&s2, &s2, Caps::new(8, 6)).unwrap();
    assert!(r.matches, "{:?}", r.rows);
    assert_eq!(&r.fiber_dims(6)[2..6], &[1, 2, 3, 4]);
}

#[test]
fn wedge_with_a_point() {
    let s3 = crate::sullivan::CdgaPresentation::sphere(3);
    let pt = crate::sullivan::CdgaPresentation::new();
    let r = wedge_fiber_check(&s3, &pt, Caps::new(8, 6)).unwrap();
    assert!(r.matches);
    assert!(r.rows.is_empty());
}

#[test]
fn wedge_of_two_circles() {
    let s1 = crate::sullivan::CdgaPresentation::sphere(1);
    let r = wedge_fiber_check(&s1, &s1, Caps::new(4, 6)).unwrap();
    assert!(r.graded);
    assert!(r.matches, "{:?}", r.rows);
    for m in 1..=6 {
        assert_eq!(r.get(1, m), m as usize - 1);
    }
}
