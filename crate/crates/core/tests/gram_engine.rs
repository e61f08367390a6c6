mod common;

use common::{gram_entry, random_rational, reduce_word, word_to_parts};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use virmod::exact::{BigRational, DenseMatrix, Field, PrimeField, Rationals};
use virmod::virasoro::{gram_matrix, partitions, Partition, PbwVector, VermaModule, VermaParams};
use virmod::weights::{canonical_labels, central_charge};

fn params(c: &BigRational, h: &BigRational) -> VermaParams<Rationals> {
    VermaParams::rational(c.clone(), h.clone())
}

#[test]
fn gram_matches_word_oracle_to_level_three() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let (c, h) = (random_rational(&mut rng), random_rational(&mut rng));
        let mut module = VermaModule::new(params(&c, &h));
        for level in 0..=3 {
            let g = module.gram_matrix(level);
            let basis = partitions(level);
            for (i, mu) in basis.iter().enumerate() {
                for (j, lambda) in basis.iter().enumerate() {
                    assert_eq!(g.get(i, j), &gram_entry(mu.parts(), lambda.parts(), &c, &h));
                }
            }
        }
    }
}

#[test]
fn apply_mode_matches_word_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (c, h) = (random_rational(&mut rng), random_rational(&mut rng));
    let mut module = VermaModule::new(params(&c, &h));
    for degree in 0..=4 {
        for lambda in partitions(degree) {
            for k in [-3i64, -2, -1, 1, 2, 3, 4] {
                let state = PbwVector::basis(&Rationals, lambda.clone());
                let image = module.apply_mode(k, &state).unwrap();
                let mut word = vec![k];
                word.extend(lambda.parts().iter().map(|&p| -(p as i64)));
                let expected = reduce_word(&word, &c, &h);
                let got: Vec<(Vec<u32>, BigRational)> =
                    image.terms().map(|(p, q)| (p.parts().to_vec(), q.clone())).collect();
                let want: Vec<(Vec<u32>, BigRational)> =
                    expected.iter().map(|(w, q)| (word_to_parts(w), q.clone())).collect();
                let mut want = want;
                want.sort();
                let mut got = got;
                got.sort();
                assert_eq!(got, want, "L_{k} on {lambda}");
            }
        }
    }
}

fn coefficients(v: &PbwVector<Rationals>, level: usize) -> Vec<BigRational> {
    partitions(level).iter().map(|p| v.coefficient(&Rationals, p)).collect()
}

fn form(g: &DenseMatrix<Rationals>, x: &[BigRational], y: &[BigRational]) -> BigRational {
    let mut total = BigRational::zero();
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            total += xi * g.get(i, j) * yj;
        }
    }
    total
}

fn random_vector(rng: &mut impl Rng, level: usize) -> PbwVector<Rationals> {
    let mut v = PbwVector::zero(level);
    for p in partitions(level) {
        let coeff = random_rational(rng);
        v.add_scaled(&Rationals, &PbwVector::basis(&Rationals, p), &coeff);
    }
    v
}

#[test]
fn raising_and_lowering_are_adjoint() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (c, h) = (random_rational(&mut rng), random_rational(&mut rng));
    let mut module = VermaModule::new(params(&c, &h));
    let grams: Vec<DenseMatrix<Rationals>> = (0..=6).map(|n| module.gram_matrix(n)).collect();
    for k in 1..=4usize {
        for d in 0..=6 - k {
            let x = random_vector(&mut rng, d);
            let y = random_vector(&mut rng, d + k);
            let raised = module.apply_mode(-(k as i64), &x).unwrap();
            let lowered = module.apply_mode(k as i64, &y).unwrap();
            let lhs = form(&grams[d + k], &coefficients(&raised, d + k), &coefficients(&y, d + k));
            let rhs = form(&grams[d], &coefficients(&x, d), &coefficients(&lowered, d));
            assert_eq!(lhs, rhs, "k = {k}, d = {d}");
        }
    }
}

#[test]
fn memoised_and_plain_rewriting_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (c, h) = (random_rational(&mut rng), random_rational(&mut rng));
    let mut cached = VermaModule::new(params(&c, &h));
    let mut plain = VermaModule::without_memo(params(&c, &h));
    for level in 0..=5 {
        assert_eq!(cached.gram_matrix(level), plain.gram_matrix(level));
        for lambda in partitions(level) {
            let v = PbwVector::basis(&Rationals, lambda);
            for k in [-4i64, -1, 1, 2, 5] {
                assert_eq!(cached.apply_mode(k, &v).unwrap(), plain.apply_mode(k, &v).unwrap());
            }
        }
    }
    assert_eq!(plain.cache_len(), 0);
    assert!(cached.cache_len() > 0);
}

#[test]
fn degree_bookkeeping_and_dyadic_denominators() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..5 {
        let c = BigRational::from_integer(BigInt::from(rng.gen_range(-20i64..20)));
        let h = BigRational::from_integer(BigInt::from(rng.gen_range(-20i64..20)));
        let mut module = VermaModule::new(params(&c, &h));
        for d in 0..=5 {
            for lambda in partitions(d) {
                let v = PbwVector::basis(&Rationals, lambda);
                for k in -3i64..=5 {
                    if k == 0 {
                        continue;
                    }
                    let image = module.apply_mode(k, &v).unwrap();
                    if !image.is_zero() {
                        assert_eq!(image.degree() as i64, d as i64 - k);
                    }
                    for (p, q) in image.terms() {
                        assert_eq!(p.degree() as i64, d as i64 - k);
                        let mut den = q.denom().clone();
                        while (&den % 2u32).is_zero() {
                            den /= 2u32;
                        }
                        assert!(den.is_one(), "denominator {} is not a power of two", q.denom());
                    }
                }
            }
        }
    }
}

#[test]
fn mod_p_rank_bounded_by_rational_rank() {
    for ell in 2..=3u64 {
        let c = central_charge(ell).unwrap();
        for label in canonical_labels(ell).unwrap() {
            let h = label.weight();
            let mut over_q = VermaModule::new(params(&c, &h));
            for p in [3u64, 5, 7, 11, 13] {
                let Ok(modular) = VermaParams::reduced(&c, &h, p) else { continue };
                let mut over_p = VermaModule::new(modular);
                for level in 0..=6 {
                    let gq = over_q.gram_matrix(level);
                    let gp = over_p.gram_matrix(level);
                    assert_eq!(gq.reduce_mod(PrimeField::new(p).unwrap()).unwrap(), gp);
                    assert!(gp.rank() <= gq.rank());
                }
            }
        }
    }
}

#[test]
fn free_function_matches_module() {
    let (c, h) = (BigRational::new(1.into(), 3.into()), BigRational::new(2.into(), 5.into()));
    let f = PrimeField::new(13).unwrap();
    let pf = VermaParams { field: f, c: f.from_ratio(1, 3), h: f.from_ratio(2, 5) };
    for level in 0..=4 {
        let q = gram_matrix(&params(&c, &h), level);
        assert_eq!(q.reduce_mod(f).unwrap(), gram_matrix(&pf, level));
    }
    assert_eq!(Partition::empty().degree(), 0);
}
