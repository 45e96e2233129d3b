use std::collections::BTreeMap;

use super::*;
use crate::rational::{q, Q};
use crate::sullivan::{quadratic_model, SphereClass};

fn ungraded(n: usize, degree: u32) -> Vec<Letter> {
    (0..n).map(|i| Letter::new(format!("x{}", i + 1), degree)).collect()
}

fn by_length(d: &BTreeMap<(u32, u32, u32), usize>, max_len: u32) -> Vec<usize> {
    (1..=max_len).map(|l| d.iter().filter(|((ll, _, _), _)| *ll == l).map(|(_, n)| n).sum()).collect()
}

#[test]
fn witt_two_circles() {
    let letters = ungraded(2, 0);
    let d = witt_dims_full(&letters, 5);
    assert_eq!(by_length(&d, 5), vec![2, 1, 2, 3, 6]);
    for n in 1..=5 {
        assert_eq!(by_length(&d, 5)[n as usize - 1] as u64, necklace(2, n));
    }
}

#[test]
fn witt_odd_letters_have_squares() {
    let letters = ungraded(2, 1);
    let d = witt_dims(&letters, 3);
    assert_eq!(d[&(2, 2)], 3);
}

#[test]
fn witt_hall_and_brute_force_agree() {
    for letters in [
        ungraded(2, 0),
        ungraded(3, 0),
        ungraded(2, 1),
        vec![Letter::new("a", 1), Letter::new("b", 2)],
        vec![Letter::weighted("a", 1, 1), Letter::weighted("b", 1, 2), Letter::weighted("c", 2, 1)],
    ] {
        let w = witt_dims_full(&letters, 5);
        let h = FreeLie::new(letters.clone(), 5).dims_full();
        let b = brute_force_dims(&letters, 5);
        assert_eq!(w, h);
        assert_eq!(w, b);
    }
}

#[test]
fn hall_normal_forms() {
    let lie = FreeLie::new(ungraded(2, 0), 4);
    let a = lie.hall_normal_form("[[x1,x2],x1]").unwrap();
    let b = lie.hall_normal_form("-[x1,[x1,x2]]").unwrap();
    assert_eq!(a, b);
    assert!(!a.is_zero());
    assert!(lie.hall_normal_form("[x1,x1]").unwrap().is_zero());
    let jacobi = lie.hall_normal_form("[x1,[x2,x1]] + [x2,[x1,x1]] + [x1,[x1,x2]]").unwrap();
    assert!(jacobi.is_zero());
}

#[test]
fn odd_square_is_basis_element() {
    let lie = FreeLie::new(ungraded(1, 1), 3);
    let s = lie.hall_normal_form("[x1,x1]").unwrap();
    assert_eq!(lie.fmt(&s), "[x1,x1]");
    assert!(lie.hall_normal_form("[x1,[x1,x1]]").unwrap().is_zero());
}

#[test]
fn lyndon_enumeration() {
    let words = lyndon_words(2, 4);
    assert_eq!(words.len(), 2 + 1 + 2 + 3);
    assert!(words.iter().all(|w| is_lyndon(w)));
}

#[test]
fn hopf_bracket_on_sphere() {
    let qm = quadratic_model(&SphereClass::wedge(&[2]), 3, None).unwrap();
    let ev = BracketEval::new(&qm.alg);
    let b = ev.eval(&parse_lie("[x1,x1]").unwrap()).unwrap();
    assert_eq!(b.degree, 3);
    assert_eq!(b.values.values().cloned().collect::<Vec<_>>(), vec![q(2)]);
    let half = ev.eval(&parse_lie("1/2 [x1,x1]").unwrap()).unwrap();
    assert_eq!(half.values.values().cloned().collect::<Vec<_>>(), vec![q(1)]);
}

#[test]
fn brackets_are_graded_antisymmetric() {
    let qm = quadratic_model(&SphereClass::wedge(&[2, 2]), 5, None).unwrap();
    let ev = BracketEval::new(&qm.alg);
    let xy = ev.eval(&parse_lie("[x1,x2]").unwrap()).unwrap();
    let yx = ev.eval(&parse_lie("[x2,x1]").unwrap()).unwrap();
    assert!(!xy.is_zero());
    assert_eq!(xy, yx);
    let circles = quadratic_model(&SphereClass::wedge(&[1, 1]), 1, Some(3)).unwrap();
    let ev = BracketEval::new(&circles.alg);
    let xy = ev.eval(&parse_lie("[x1,x2]").unwrap()).unwrap();
    let yx = ev.eval(&parse_lie("[x2,x1]").unwrap()).unwrap();
    assert_eq!(xy.values.len(), 1);
    let v = xy.values.values().next().unwrap().clone();
    assert!(v == q(1) || v == q(-1));
    assert_eq!(xy, yx.scale(&q(-1)));
}

#[test]
fn jacobi_in_homotopy_lie_algebra() {
    let qm = quadratic_model(&SphereClass::wedge(&[2, 2]), 7, None).unwrap();
    let ev = BracketEval::new(&qm.alg);
    // odd x, y: [x,[x,y]] + [x,[x,y]] + [y,[x,x]] = 0 reduces to 2[x,[x,y]] = -[y,[x,x]]
    let a = ev.eval(&parse_lie("2 [x1,[x1,x2]] + [x2,[x1,x1]]").unwrap()).unwrap();
    assert!(a.is_zero());
    let b = ev.eval(&parse_lie("[x1,[x1,x2]]").unwrap()).unwrap();
    assert!(!b.is_zero());
}

#[test]
fn lcs_of_two_circles() {
    let qm = quadratic_model(&SphereClass::wedge(&[1, 1]), 1, Some(5)).unwrap();
    let t = lcs_quotients(&qm.alg, 1, 5).unwrap();
    let got: Vec<usize> = (2..=5).map(|r| t.total(0, r)).collect();
    assert_eq!(got, vec![2, 3, 5, 8]);
}

#[test]
fn magnus_logs() {
    let a2 = magnus_log(&parse_group_word("a^2", 2).unwrap(), 4).unwrap();
    assert_eq!(a2.tensor, TElem::letter(0).scale(&q(2)));
    let c = magnus_log(&parse_group_word("[a,b]", 2).unwrap(), 4).unwrap();
    assert_eq!(c.leading_length, Some(2));
    let letters = circle_letters(2);
    assert_eq!(c.component(2), TElem::letter(0).bracket(&TElem::letter(1), &letters));
    let w = parse_group_word("aba⁻¹b⁻¹", 2).unwrap();
    assert_eq!(w, parse_group_word("abAB", 2).unwrap());
    assert!(magnus_log(&parse_group_word("abBA", 2).unwrap(), 4).unwrap().is_trivial());
    let w = parse_group_word("a^3 b a^-1 [a,b]^2", 2).unwrap();
    let l = magnus_log(&w, 5).unwrap();
    assert_eq!(l.tensor.exp_trunc(5), magnus_image(&w, 5));
    assert_eq!(l.tensor.length_part(1), TElem::letter(0).scale(&q(2)).add(&TElem::letter(1)));
}

#[test]
fn bch_to_third_order() {
    let letters = circle_letters(2);
    let x = TElem::letter(0);
    let y = TElem::letter(1);
    let xy = x.bracket(&y, &letters);
    let mut want = x.add(&y).add(&xy.scale(&Q::new(1.into(), 2.into())));
    let third = x.bracket(&xy, &letters).add(&y.bracket(&y.bracket(&x, &letters), &letters));
    want = want.add(&third.scale(&Q::new(1.into(), 12.into())));
    assert_eq!(bch(&x, &y, 3), want);
}

#[test]
fn group_word_errors() {
    assert!(parse_group_word("ac", 2).is_err());
    assert!(parse_group_word("[a,b", 2).is_err());
    assert!(parse_group_word("1", 2).unwrap().is_trivial());
}
