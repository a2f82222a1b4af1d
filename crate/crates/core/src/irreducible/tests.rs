use super::*;
use crate::field::parse_form;
use crate::geometry::fixtures;
use crate::random;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pf(s: &str) -> Form {
    parse_form(s).unwrap()
}

fn cfg() -> ZeroTestConfig {
    ZeroTestConfig::default()
}

#[test]
fn g1_torsion_pieces() {
    let g = fixtures::g1();
    let d = torsion_pieces(&g);
    assert_eq!(d.trace_one_form, pf("dx2"));
    assert!(d.sigma.is_exact_zero());
    assert!(d.piece3.is_exact_zero());
    assert_eq!(d.piece2.get(&[0]), &pf("1/2*dx1^dx2"));
    assert!(d.piece2.get(&[1]).is_exact_zero());
    assert_eq!(d.piece2.get(&[2]), &pf("-1/2*dx2^dx3"));
    assert_eq!(d.piece1, g.t().sub(&d.piece2));
}

#[test]
fn g1_nonmetricity_helpers() {
    let g = fixtures::g1();
    let d = nonmetricity_pieces(&g);
    assert!(d.weyl.is_exact_zero());
    assert_eq!(d.lambda_a.get(&[1]), &pf("1/2"));
    assert!(d.lambda_a.get(&[0]).is_exact_zero() && d.lambda_a.get(&[2]).is_exact_zero());
    assert_eq!(d.second_trace, d.lambda_a);
    for c in nonmetricity_certificates(g.q(), &d, g.frame(), &cfg()).unwrap() {
        assert!(c.holds, "{}", c.name);
    }
}

#[test]
fn trace_type_torsion() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let frame = random::coframe(&mut rng, 1);
    let phi = random::form(&mut rng, 1, 1, 2);
    let t = TensorForm::from_fn(&[Slot::Up], 2, Basis::Coordinate, |i| frame.one_form(i[0]).wedge(&phi));
    let d = decompose_torsion(&t, &frame);
    assert_eq!(d.piece2, t);
    assert!(d.piece1.is_exact_zero() && d.piece3.is_exact_zero());
}

#[test]
fn weyl_type_nonmetricity() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let frame = random::coframe(&mut rng, 1);
    let q1 = random::form(&mut rng, 1, 1, 2);
    let q = TensorForm::from_fn(&DD, 1, Basis::Coordinate, |i| {
        if i[0] == i[1] {
            q1.scale_rat(&rat(1, 3))
        } else {
            Form::zero(1)
        }
    });
    let d = decompose_nonmetricity(&q, &frame);
    assert_eq!(d.piece4, q);
    assert!(d.piece1.is_exact_zero() && d.piece2.is_exact_zero() && d.piece3.is_exact_zero());
}

#[test]
fn certificates_and_idempotence_on_random_geometries() {
    for seed in 0..3 {
        let g = fixtures::random_metric_affine(300 + seed, 1);
        let td = torsion_pieces(&g);
        for c in torsion_certificates(g.t(), &td, g.frame(), &cfg()).unwrap() {
            assert!(c.holds, "seed {seed}: torsion {}", c.name);
        }
        for (k, p) in td.pieces().into_iter().enumerate() {
            let again = decompose_torsion(p, g.frame());
            for (j, q) in again.pieces().into_iter().enumerate() {
                if j == k {
                    assert_eq!(q, p);
                } else {
                    assert!(q.is_exact_zero());
                }
            }
        }
        let qd = nonmetricity_pieces(&g);
        for c in nonmetricity_certificates(g.q(), &qd, g.frame(), &cfg()).unwrap() {
            assert!(c.holds, "seed {seed}: nonmetricity {}", c.name);
        }
    }
}

#[test]
fn piece_dimensions() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let frame = random::coframe(&mut rng, 1);
    let p = [Rational::from(3), rat(-2, 7), rat(5, 11)];
    let (t, q) = piece_ranks(&frame, &p).unwrap();
    assert_eq!(t, TORSION_COUNTS);
    assert_eq!(q.iter().sum::<usize>(), 18);
    assert_eq!(q, [7, 5, 3, 3]);
}
