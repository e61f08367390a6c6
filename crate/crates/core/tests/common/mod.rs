//! Test-only oracles kept independent of the library's normal-ordering engine.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use virmod::exact::BigRational;

/// A word `[a_1, ..., a_r]` stands for `L_{a_1} ... L_{a_r} v`.
pub type Word = Vec<i64>;

/// Reduces a word to normal form by repeated single swaps of adjacent
/// out-of-order modes, with no caching. The result maps normal words (all
/// modes negative, non-decreasing left to right) to coefficients.
pub fn reduce_word(word: &[i64], c: &BigRational, h: &BigRational) -> BTreeMap<Word, BigRational> {
    let mut out = BTreeMap::new();
    accumulate(word, &BigRational::from_integer(1.into()), c, h, &mut out);
    out.retain(|_, v| !v.is_zero());
    out
}

fn accumulate(word: &[i64], coeff: &BigRational, c: &BigRational, h: &BigRational, out: &mut BTreeMap<Word, BigRational>) {
    if coeff.is_zero() {
        return;
    }
    if let Some(i) = (0..word.len().saturating_sub(1)).find(|&i| word[i] > word[i + 1]) {
        let (a, b) = (word[i], word[i + 1]);
        // L_a L_b = L_b L_a + (a - b) L_{a+b} + delta_{a+b,0} (a^3 - a)/12 C
        let mut swapped = word.to_vec();
        swapped.swap(i, i + 1);
        accumulate(&swapped, coeff, c, h, out);

        let mut merged = word[..i].to_vec();
        merged.push(a + b);
        merged.extend_from_slice(&word[i + 2..]);
        let factor = BigRational::from_integer(BigInt::from(a - b));
        accumulate(&merged, &(coeff * factor), c, h, out);

        if a + b == 0 {
            let mut dropped = word[..i].to_vec();
            dropped.extend_from_slice(&word[i + 2..]);
            let central = BigRational::new(BigInt::from(a * a * a - a), BigInt::from(12)) * c;
            accumulate(&dropped, &(coeff * central), c, h, out);
        }
        return;
    }
    match word.last() {
        Some(&last) if last > 0 => {}
        Some(&0) => accumulate(&word[..word.len() - 1], &(coeff * h), c, h, out),
        _ => {
            let entry = out.entry(word.to_vec()).or_insert_with(BigRational::zero);
            *entry += coeff;
        }
    }
}

/// Gram entry `<L_{-mu} v, L_{-lambda} v>` from the word oracle.
pub fn gram_entry(mu: &[u32], lambda: &[u32], c: &BigRational, h: &BigRational) -> BigRational {
    let mut word: Word = mu.iter().rev().map(|&m| m as i64).collect();
    word.extend(lambda.iter().map(|&l| -(l as i64)));
    reduce_word(&word, c, h).remove(&Vec::new()).unwrap_or_else(BigRational::zero)
}

/// Normal word `[-a_1, ..., -a_k]` to partition parts `[a_1, ..., a_k]`.
pub fn word_to_parts(word: &[i64]) -> Vec<u32> {
    word.iter().map(|&m| (-m) as u32).collect()
}

pub fn random_rational(rng: &mut impl Rng) -> BigRational {
    let num: i64 = rng.gen_range(-60..=60);
    let den: i64 = rng.gen_range(1..=40);
    BigRational::new(num.into(), den.into())
}
