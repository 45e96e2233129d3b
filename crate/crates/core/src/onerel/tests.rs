use num_traits::Signed;
use std::collections::HashMap;

use super::*;
use crate::attach::{inertness_check, ClassSpec};
use crate::caps::Caps;
use crate::lie::{circle_letters, witt_dims, TElem, Word};
use crate::linalg::{Echelon, SparseVec};
use crate::rational::q;
use crate::sullivan::{quadratic_model, SphereClass};

fn scenario(r: usize, word: &str) -> OneRelatorScenario {
    OneRelatorScenario::new(r, word, Caps::new(8, 6)).unwrap()
}

fn vec_of(t: &TElem, index: &mut HashMap<Word, usize>) -> SparseVec {
    let mut v: SparseVec = t
        .terms
        .iter()
        .map(|(w, c)| {
            let k = index.len();
            (*index.entry(w.clone()).or_insert(k), c.clone())
        })
        .collect();
    v.sort_by_key(|e| e.0);
    v
}

/// `dim 𝕃(x)_m - dim (α_n)_m`, the ideal spanned by iterated brackets
/// `[x_{i1}, [x_{i2}, … [x_{ik}, α_n]]]` in the tensor algebra.
fn quotient_oracle(r: usize, alpha: &TElem, n: usize, max_len: usize) -> Vec<usize> {
    let letters = circle_letters(r);
    let free = witt_dims(&letters, max_len as u32);
    let mut layer = vec![alpha.clone()];
    let mut out = Vec::new();
    for m in 1..=max_len {
        let total = free.get(&(0, m as u32)).copied().unwrap_or(0);
        let ideal = if m < n {
            0
        } else {
            if m > n {
                let mut next = Vec::new();
                for t in &layer {
                    for i in 0..r {
                        next.push(TElem::letter(i).bracket(t, &letters));
                    }
                }
                layer = next;
            }
            let mut index = HashMap::new();
            let mut ech = Echelon::new();
            for t in &layer {
                let _ = ech.insert(&vec_of(t, &mut index));
            }
            ech.rank()
        };
        out.push(total - ideal);
    }
    out
}

#[test]
fn magnus_leading_terms() {
    let d = build_dg_lie(&scenario(2, "[a,b]")).unwrap();
    assert_eq!(d.y_weight, 2);
    let letters = circle_letters(2);
    let xy = TElem::letter(0).bracket(&TElem::letter(1), &letters);
    assert_eq!(d.leading_dy(), &xy);

    let d = build_dg_lie(&scenario(2, "a^2")).unwrap();
    assert_eq!(d.dy(), &TElem::letter(0).scale(&q(2)));

    let d = build_dg_lie(&scenario(3, "a")).unwrap();
    assert_eq!(d.dy(), &TElem::letter(0));
}

#[test]
fn differential_squares_to_zero() {
    let d = build_dg_lie(&scenario(2, "[a,b]a")).unwrap();
    for b in &d.lie.basis {
        if b.weight <= 4 {
            assert!(d.d(&d.d(&b.expansion)).is_zero());
        }
    }
}

#[test]
fn commutator_relator_homology() {
    let h = dg_lie_homology(&build_dg_lie(&scenario(2, "[a,b]")).unwrap());
    assert_eq!(h.h0_dims(), vec![2, 0, 0, 0, 0, 0]);
    assert!(h.higher_vanish());
}

#[test]
fn square_relator_homology() {
    let h = dg_lie_homology(&build_dg_lie(&scenario(2, "a^2")).unwrap());
    assert_eq!(h.h0_dims(), vec![1, 0, 0, 0, 0, 0]);
    assert!(h.higher_vanish());
}

#[test]
fn h0_matches_ideal_oracle() {
    for (r, w) in [(2, "[a,b]"), (2, "a^2"), (3, "[a,b]c^2"), (2, "[a,[a,b]]"), (3, "[a,b][a,c]")] {
        let s = scenario(r, w);
        let d = build_dg_lie(&s).unwrap();
        let h = dg_lie_homology(&d);
        let n = d.y_weight as usize;
        assert_eq!(h.h0_dims(), quotient_oracle(r, d.leading_dy(), n, 6), "{w}");
        assert!(h.higher_vanish(), "{w}");
        // with H_{≥1} = 0 the Euler characteristic is H_0
        for m in 1..=6 {
            let chi: i64 = h
                .rows
                .iter()
                .filter(|x| x.weight == m)
                .map(|x| if x.q % 2 == 0 { x.chains as i64 } else { -(x.chains as i64) })
                .sum();
            assert_eq!(chi, h.get(0, m) as i64, "{w} length {m}");
        }
    }
}

#[test]
fn d0_for_a_primitive_word() {
    let d = build_d0(&scenario(2, "a")).unwrap();
    let z1 = d.model.alg.find("z1").unwrap();
    let z2 = d.model.alg.find("z2").unwrap();
    assert_eq!(d.d0[z1].coeff_of_gen(d.a).abs(), q(1));
    assert!(d.d0[z2].is_zero());
    assert!(d.checks().unwrap().iter().all(|c| c.passed));
}

#[test]
fn d0_for_a_commutator() {
    let d = build_d0(&scenario(2, "[a,b]")).unwrap();
    let w = &d.model.alg;
    for g in 0..w.len() {
        if w.gen(g).degree == 1 && w.gen(g).weight == 1 {
            assert!(d.d0[g].is_zero());
        }
        if w.gen(g).degree == 1 && w.gen(g).weight == 2 {
            assert!(!d.d0[g].is_zero());
        }
    }
    assert_eq!(d.first_nonzero_weight(), Some(2));
    let failed: Vec<_> = d.checks().unwrap().into_iter().filter(|c| !c.passed).collect();
    assert!(failed.is_empty(), "{failed:?}");
}

#[test]
fn trivial_word() {
    let s = scenario(2, "1");
    let d = build_d0(&s).unwrap();
    assert!(d.d0.iter().all(|p| p.is_zero()));
    let rep = aspherical_check(&s).unwrap();
    assert!(!rep.aspherical);
    assert!(!rep.verdict.inert());
    assert_eq!(rep.verdict.criterion_ii, None);
    assert_eq!(rep.verdict.witness.as_ref().unwrap().degree, 2);
}

#[test]
fn torus() {
    let rep = aspherical_check(&scenario(2, "[a,b]")).unwrap();
    assert!(rep.aspherical);
    assert!(rep.verdict.inert());
    assert_eq!(rep.v_dims, vec![2, 0, 0, 0, 0, 0]);
    assert_eq!(rep.verdict.criterion_ii, Some(true));
    let failed: Vec<_> = rep.verdict.failed_checks();
    assert!(failed.is_empty(), "{failed:?}");
    assert!(rep.verdict.certificate.as_ref().unwrap().prop5_match);
    let d = build_d0(&scenario(2, "[a,b]")).unwrap();
    let m = corollary_model(&d).unwrap();
    assert_eq!(m.alg.cohomology_dims(3, None).unwrap(), vec![1, 2, 1, 0]);
}

#[test]
fn proper_power() {
    let rep = aspherical_check(&scenario(2, "a^2")).unwrap();
    assert!(rep.aspherical);
    assert!(rep.verdict.inert());
    assert_eq!(rep.v_dims, vec![1, 0, 0, 0, 0, 0]);
    assert!(rep.verdict.failed_checks().is_empty(), "{:?}", rep.verdict.failed_checks());
    let d = build_d0(&scenario(2, "a^2")).unwrap();
    let m = corollary_model(&d).unwrap();
    assert_eq!(m.alg.cohomology_dims(2, None).unwrap(), vec![1, 1, 0]);
}

#[test]
fn genus_two() {
    let s = scenario(4, "[a,b][c,d]");
    let rep = aspherical_check(&s).unwrap();
    assert!(rep.homology.higher_vanish());
    assert_eq!(rep.h0_dims[0], 4);
    let d = build_dg_lie(&s).unwrap();
    assert_eq!(rep.h0_dims, quotient_oracle(4, d.leading_dy(), 2, 6));
    assert_eq!(rep.v_dims, rep.h0_dims);
    assert!(rep.aspherical);
    assert!(rep.verdict.failed_checks().is_empty(), "{:?}", rep.verdict.failed_checks());
}

#[test]
fn attach_dispatches_circles() {
    let w = quadratic_model(&SphereClass::wedge(&[1, 1]), 3, Some(6)).unwrap().alg;
    let v = inertness_check(&w, 1, &ClassSpec::group("[a,b]"), Caps::new(8, 6)).unwrap();
    assert!(v.inert());
    let v = inertness_check(&w, 1, &ClassSpec::Zero, Caps::new(8, 6)).unwrap();
    assert!(!v.inert());
}

#[test]
fn asphericity_of_models() {
    let circles = quadratic_model(&SphereClass::wedge(&[1, 1]), 4, Some(5)).unwrap().alg;
    assert!(model_aspherical(&circles, 4));
    let s2 = quadratic_model(&SphereClass::wedge(&[2]), 4, None).unwrap().alg;
    assert!(!model_aspherical(&s2, 4));
    let d = build_d0(&scenario(2, "[a,b]")).unwrap();
    let m = corollary_model(&d).unwrap();
    let c = whitehead_check(&circles, &m.alg, 4);
    assert!(c.complex_aspherical && c.holds);
}
