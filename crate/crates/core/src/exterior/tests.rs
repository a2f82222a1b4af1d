use super::*;
use crate::field::{parse_form, ScalarField};
use crate::random;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pf(s: &str) -> Form {
    parse_form(s).unwrap()
}

fn coord(f: Form) -> TensorForm {
    TensorForm::from_form(f, Basis::Coordinate)
}

#[test]
fn tensor_wedge_concatenates_slots() {
    let frame = Coframe::identity();
    let e = TensorForm::from_fn(&[Slot::Up], 1, Basis::Coordinate, |i| frame.one_form(i[0]));
    let ee = wedge(&e, &e).unwrap();
    assert_eq!(ee.slots(), &[Slot::Up, Slot::Up]);
    assert_eq!(ee.degree(), 2);
    assert_eq!(ee.get(&[0, 1]), &pf("dx1^dx2"));
    assert_eq!(ee.get(&[1, 0]), &pf("-dx1^dx2"));
    assert!(ee.get(&[2, 2]).is_exact_zero());
}

#[test]
fn interior_rejects_zero_forms() {
    let f = Coframe::identity();
    assert_eq!(iota(0, &coord(pf("x")), &f), Err(ExteriorError::InteriorOfZeroForm));
}

#[test]
fn frame_basis_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let frame = random::coframe(&mut rng, 2);
    for p in 0..4 {
        let a = coord(random::form(&mut rng, p, 2, 3));
        let there = change_basis(&a, &frame, Direction::ToFrame);
        assert_eq!(there.basis(), Basis::Frame);
        assert_eq!(change_basis(&there, &frame, Direction::ToCoordinate), a);
    }
}

fn eq15_frame(seed: u64) -> Coframe {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random::coframe(&mut rng, 1)
}

#[test]
fn hodge_symmetry_of_inner_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = eq15_frame(4);
    for p in 0..4 {
        let l = random::form(&mut rng, p, 1, 2);
        let g = random::form(&mut rng, p, 1, 2);
        let lhs = l.wedge(&f.hodge(&g));
        let rhs = g.wedge(&f.hodge(&l));
        assert_eq!(lhs, rhs, "degree {p}");
    }
}

#[test]
fn interior_of_dual_is_dual_of_wedge() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let f = eq15_frame(6);
    for p in 0..3 {
        let l = random::form(&mut rng, p, 1, 2);
        for a in 0..3 {
            let lhs = f.iota(a, &f.hodge(&l)).unwrap();
            let rhs = f.hodge(&l.wedge(&f.one_form(a)));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn frame_number_operator() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = eq15_frame(8);
    for p in 1..4 {
        let l = random::form(&mut rng, p, 1, 2);
        let mut acc = Form::zero(p);
        for a in 0..3 {
            acc = &acc + &f.one_form(a).wedge(&f.iota(a, &l).unwrap());
        }
        assert_eq!(acc, l.scale_int(p as i64));
    }
}

#[test]
fn basis_dual_identities() {
    let f = eq15_frame(9);
    let vol = f.hodge(&Form::constant(1));
    let e = |a: usize| f.one_form(a);
    for a in 0..3 {
        for b in 0..3 {
            let lhs = e(a).wedge(&f.hodge(&e(b)));
            assert_eq!(lhs, vol.scale_int(delta(a, b)));
            for c in 0..3 {
                let lhs = e(a).wedge(&f.hodge(&e(b).wedge(&e(c))));
                let rhs = &f.hodge(&e(c)).scale_int(-delta(a, b)) + &f.hodge(&e(b)).scale_int(delta(a, c));
                assert_eq!(lhs, rhs, "({a},{b},{c})");
                assert_eq!(e(a).wedge(&e(b)).wedge(&e(c)), vol.scale_int(eps(a, b, c)));
                let lhs = f.hodge(&e(a)).wedge(&f.hodge(&e(b).wedge(&e(c))));
                assert_eq!(lhs, vol.scale_int(eps(a, b, c)));
            }
        }
    }
}

#[test]
fn hodge_on_frame_basis_matches_epsilon_rules() {
    let f = eq15_frame(10);
    assert_eq!(f.hodge(&Form::constant(1)), f.basis_form(&[0, 1, 2]));
    for a in 0..3 {
        let mut expect = Form::zero(2);
        for b in 0..3 {
            for c in 0..3 {
                if b < c {
                    expect = &expect + &f.basis_form(&[b, c]).scale_int(eps(a, b, c));
                }
            }
        }
        assert_eq!(f.hodge(&f.one_form(a)), expect);
    }
    assert_eq!(f.hodge(&f.basis_form(&[0, 1, 2])), Form::constant(1));
}

fn arb_form(degree: usize) -> impl Strategy<Value = Form> {
    any::<u64>().prop_map(move |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        random::form(&mut rng, degree, 3, 4)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn d_squared_vanishes(p in 0usize..3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random::form(&mut rng, p, 3, 4);
        prop_assert!(f.d().d().is_exact_zero());
    }

    #[test]
    fn graded_commutativity(a in arb_form(1), b in arb_form(2), c in arb_form(1)) {
        prop_assert_eq!(a.wedge(&b), b.wedge(&a));
        prop_assert_eq!(a.wedge(&c), c.wedge(&a).scale_int(-1));
    }

    #[test]
    fn leibniz_rule(a in arb_form(1), b in arb_form(1)) {
        let lhs = a.wedge(&b).d();
        let rhs = &a.d().wedge(&b) - &a.wedge(&b.d());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn scalar_multiplication_commutes_with_hodge() {
    let f = eq15_frame(12);
    let g = ScalarField::var(0);
    let a = pf("dx1 + y*dx2");
    assert_eq!(f.hodge(&a.scale(&g)), f.hodge(&a).scale(&g));
}
