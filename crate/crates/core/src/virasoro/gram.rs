use serde::Serialize;

use super::{partition_count, partitions, PbwVector, VermaModule, VermaParams};
use crate::exact::{DenseMatrix, Field};

impl<F: Field> VermaModule<F> {
    /// Contravariant form on degree `level`, in the basis of [`partitions`].
    ///
    /// Entry `(mu, lambda)` is the coefficient of `v` in
    /// `L_{mu_k} ... L_{mu_1} L_{-lambda_1} ... L_{-lambda_j} v`.
    pub fn gram_matrix(&mut self, level: usize) -> DenseMatrix<F> {
        let basis = partitions(level);
        let field = self.field().clone();
        let n = basis.len();
        let mut entries = vec![field.zero(); n * n];
        for (col, lambda) in basis.iter().enumerate() {
            let start = PbwVector::basis(&field, lambda.clone());
            for (row, mu) in basis.iter().enumerate() {
                let mut state = start.clone();
                for &part in mu.parts() {
                    state = self.act_vector(part as i64, &state);
                    if state.is_zero() {
                        break;
                    }
                }
                entries[row * n + col] = state.coefficient(&field, &super::Partition::empty());
            }
        }
        DenseMatrix::new(field, n, n, entries).expect("square by construction")
    }
}

/// Gram matrix of `M(c, h)` at one level.
pub fn gram_matrix<F: Field>(params: &VermaParams<F>, level: usize) -> DenseMatrix<F> {
    VermaModule::new(params.clone()).gram_matrix(level)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelRank {
    pub level: usize,
    pub verma_dim: u64,
    pub rank: usize,
}

/// Graded dimensions of the irreducible quotient `L(c, h)` up to a cutoff.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GramReport {
    pub field: String,
    pub c: String,
    pub h: String,
    pub levels: Vec<LevelRank>,
}

pub fn graded_rank<F: Field>(params: &VermaParams<F>, max_level: usize) -> GramReport {
    let mut module = VermaModule::new(params.clone());
    let levels = (0..=max_level)
        .map(|level| {
            let rank = module.gram_matrix(level).rank();
            LevelRank { level, verma_dim: partition_count(level), rank }
        })
        .collect();
    let f = &params.field;
    GramReport {
        field: f.name(),
        c: f.format_elem(&params.c),
        h: f.format_elem(&params.h),
        levels,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, BigRational, Rationals};

    fn q(c: BigRational, h: BigRational) -> VermaParams<Rationals> {
        VermaParams::rational(c, h)
    }

    #[test]
    fn low_levels() {
        let (c, h) = (rat(2, 3), rat(5, 4));
        let p = q(c.clone(), h.clone());
        assert_eq!(gram_matrix(&p, 0).to_rows(), vec![vec![rat(1, 1)]]);
        assert_eq!(gram_matrix(&p, 1).to_rows(), vec![vec![rat(2, 1) * &h]]);
        let two = gram_matrix(&p, 2).to_rows();
        let six_h = rat(6, 1) * &h;
        assert_eq!(
            two,
            vec![
                vec![rat(4, 1) * &h + &c / rat(2, 1), six_h.clone()],
                vec![six_h, rat(8, 1) * &h * &h + rat(4, 1) * &h],
            ]
        );
    }

    #[test]
    fn ranks_at_the_trivial_module() {
        let report = graded_rank(&q(rat(1, 2), rat(0, 1)), 2);
        assert_eq!(report.levels[1].rank, 0);
        assert_eq!(report.levels[2].rank, 1);
        assert_eq!(
            gram_matrix(&q(rat(1, 2), rat(0, 1)), 2).to_rows(),
            vec![vec![rat(1, 4), rat(0, 1)], vec![rat(0, 1), rat(0, 1)]]
        );
    }

    #[test]
    fn generic_params_give_full_rank() {
        let report = graded_rank(&q(rat(17, 5), rat(23, 7)), 5);
        for l in &report.levels {
            assert_eq!(l.rank as u64, l.verma_dim, "level {}", l.level);
        }
        for level in 1..=5 {
            let det = gram_matrix(&q(rat(17, 5), rat(23, 7)), level).determinant().unwrap();
            assert_ne!(det, rat(0, 1));
        }
    }

    #[test]
    fn symmetric_at_every_level() {
        for (c, h) in [(rat(1, 3), rat(2, 9)), (rat(-7, 5), rat(11, 3)), (rat(25, 1), rat(-1, 8))] {
            let mut m = VermaModule::new(q(c, h));
            for level in 0..=6 {
                assert!(m.gram_matrix(level).is_symmetric(), "level {level}");
            }
        }
    }
}
