#![allow(dead_code)]

use std::path::PathBuf;

use bicx::{Bicomplex, Complex64};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("data")
        .join(name)
}

/// Rows of a fixture file: the header is skipped, the first `text_cols`
/// fields are kept as strings and the rest parsed as numbers.
pub fn rows(name: &str, text_cols: usize) -> Vec<(Vec<String>, Vec<f64>)> {
    let text = std::fs::read_to_string(data_path(name)).expect("fixture");
    text.lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let fields: Vec<&str> = line.split(',').collect();
            let labels = fields[..text_cols].iter().map(|s| s.to_string()).collect();
            let nums = fields[text_cols..]
                .iter()
                .map(|s| s.trim().parse().expect("number"))
                .collect();
            (labels, nums)
        })
        .collect()
}

pub fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn rel(a: Complex64, b: Complex64) -> f64 {
    if b.norm() == 0.0 {
        a.norm()
    } else {
        (a - b).norm() / b.norm()
    }
}

/// Largest componentwise relative difference.
pub fn rel_bc(a: Bicomplex, b: Bicomplex) -> f64 {
    rel(a.z1, b.z1).max(rel(a.z2, b.z2))
}

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Complex number with modulus in `[lo, hi]` and argument away from the
/// negative axis by 0.1.
pub fn polar(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Complex64 {
    let r = rng.gen_range(lo..=hi);
    let t = rng.gen_range(-std::f64::consts::PI + 0.1..std::f64::consts::PI - 0.1);
    Complex64::from_polar(r, t)
}

pub fn polar_bc(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Bicomplex {
    Bicomplex::new(polar(rng, lo, hi), polar(rng, lo, hi))
}
