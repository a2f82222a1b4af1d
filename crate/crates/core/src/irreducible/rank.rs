//! Dimension of each irreducible piece, as the exact rank of the projector
//! evaluated on a basis of constant frame-component inputs.

use super::{decompose_nonmetricity, decompose_torsion, scalar_rat};
use crate::exterior::{basis, Basis, Coframe, Form, Slot, TensorForm};
use crate::field::rational::is_zero;
use crate::field::Rational;
use crate::geometry::DD;

/// Rank of a dense rational matrix by Gaussian elimination.
pub fn exact_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !is_zero(&rows[r][col])) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !is_zero(&rows[r][col]) {
                let f = &rows[r][col] / &pivot;
                for c in col..ncols {
                    let v = &rows[rank][c] * &f;
                    rows[r][c] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn frame_components(t: &TensorForm, frame: &Coframe, point: &[Rational; 3]) -> Option<Vec<Rational>> {
    let mut out = Vec::new();
    for f in t.comps() {
        for c in frame.to_frame(f).coeffs() {
            out.push(scalar_rat(c, point)?);
        }
    }
    Some(out)
}

/// Ranks of the torsion pieces (1),(2),(3) and the non-metricity pieces
/// (1)..(4) at `point`; `None` if the coframe has a pole there.
pub fn piece_ranks(frame: &Coframe, point: &[Rational; 3]) -> Option<([usize; 3], [usize; 4])> {
    let mut trows: [Vec<Vec<Rational>>; 3] = Default::default();
    for a in 0..3 {
        for j in basis(2) {
            let input = TensorForm::from_fn(&[Slot::Up], 2, Basis::Coordinate, |i| {
                if i[0] == a {
                    frame.basis_form(j)
                } else {
                    Form::zero(2)
                }
            });
            let d = decompose_torsion(&input, frame);
            for (k, p) in d.pieces().into_iter().enumerate() {
                trows[k].push(frame_components(p, frame, point)?);
            }
        }
    }
    let mut qrows: [Vec<Vec<Rational>>; 4] = Default::default();
    for a in 0..3 {
        for b in a..3 {
            for c in 0..3 {
                let input = TensorForm::from_fn(&DD, 1, Basis::Coordinate, |i| {
                    if (i[0] == a && i[1] == b) || (i[0] == b && i[1] == a) {
                        frame.one_form(c)
                    } else {
                        Form::zero(1)
                    }
                });
                let d = decompose_nonmetricity(&input, frame);
                for (k, p) in d.pieces().into_iter().enumerate() {
                    qrows[k].push(frame_components(p, frame, point)?);
                }
            }
        }
    }
    Some((trows.map(exact_rank), qrows.map(exact_rank)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(exact_rank(vec![vec![r(1), r(2)], vec![r(2), r(4)]]), 1);
        assert_eq!(exact_rank(vec![vec![r(0), r(1)], vec![r(1), r(0)]]), 2);
        assert_eq!(exact_rank(vec![vec![r(0), r(0)]]), 0);
    }
}
