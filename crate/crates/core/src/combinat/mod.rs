//! Plane trees and forests, their codes and canonical labellings,
//! permutations, compositions, packed words and non-plane trees.

mod composition;
mod forest;
mod labelled;
mod nonplane;
mod permutation;

pub use composition::{all_compositions, Composition, SignWord};
pub use forest::{enumerate_forests, enumerate_trees, PlaneForest, PlaneTree};
pub use labelled::LabelledForest;
pub use nonplane::{non_plane_class, NonPlaneTree};
pub use permutation::{all_permutations, PackedWord, Permutation};

use crate::error::{Error, Result};

/// Catalan number `C_n`.
pub fn catalan(n: usize) -> u64 {
    let mut c: u64 = 1;
    for i in 0..n as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// Formats a sequence of small integers: compact digits when every entry
/// is at most 9, comma separated otherwise.
pub(crate) fn format_seq(seq: &[u32]) -> String {
    if seq.iter().all(|&c| c <= 9) {
        seq.iter().map(|c| char::from(b'0' + *c as u8)).collect()
    } else {
        seq.iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parses either a compact digit string or a comma-separated list.
pub(crate) fn parse_seq(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let bad = || Error::code(s, "expected digits or comma-separated integers");
    if s.contains(',') {
        s.split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| bad()))
            .collect()
    } else {
        s.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect()
    }
}
