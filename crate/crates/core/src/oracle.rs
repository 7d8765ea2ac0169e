//! Independently transcribed closed forms for the Gallai-index sets and
//! f-vectors of the triangular-ladder and prism families.
//!
//! Nothing in this module calls the construction pipeline, and nothing in the
//! pipeline calls this module; the test suite builds both sides separately
//! and compares them. All formulas require `n >= 3`.

use std::collections::BTreeSet;

use crate::complex::{FVector, Face};
use crate::error::{Error, Result};

fn require_n(name: &str, n: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "{name} requires n >= 3, got {n}"
        )));
    }
    Ok(())
}

fn triple(out: &mut BTreeSet<Face>, a: u32, b: u32, c: u32) {
    out.insert(Face::new(vec![a, b, c]).expect("distinct positive labels"));
}

/// Gallai-index set of the triangular ladder on `2n` vertices, as five
/// closed families of triples:
///
/// 1. `{i, i+1, i+2}` for `1 <= i <= 2n-2`, skipping `i = n-1`;
/// 2. `{i, i+1, 2n+1-i}` for `1 <= i <= n-1`;
/// 3. `{i, i+1, 2n-1-i}` for `1 <= i <= n-2`;
/// 4. `{i, 2n-1-i, 2n-i}` for `1 <= i <= n-2`;
/// 5. `{i, 2n+1-i, 2n+2-i}` for `2 <= i <= n-1`.
pub fn omega_triangular_ladder(n: u32) -> Result<BTreeSet<Face>> {
    require_n("omega_triangular_ladder", n)?;
    let mut out = BTreeSet::new();
    for i in 1..=2 * n - 2 {
        if i != n - 1 {
            triple(&mut out, i, i + 1, i + 2);
        }
    }
    for i in 1..=n - 1 {
        triple(&mut out, i, i + 1, 2 * n + 1 - i);
    }
    for i in 1..=n - 2 {
        triple(&mut out, i, i + 1, 2 * n - 1 - i);
    }
    for i in 1..=n - 2 {
        triple(&mut out, i, 2 * n - 1 - i, 2 * n - i);
    }
    for i in 2..=n - 1 {
        triple(&mut out, i, 2 * n + 1 - i, 2 * n + 2 - i);
    }
    Ok(out)
}

/// Gallai-index set of the prism on `3n` vertices, as five closed families
/// of triples (all indices taken literally, no wrap-around):
///
/// 1. `{j, j+1, j-3}` and `{j, j+1, j-2}` for `4 <= j <= 3n-1` with `j` not
///    divisible by 3;
/// 2. `{j, j+1, j+3}` and `{j, j+1, j+4}` for `1 <= j <= 3n-4` with `j` not
///    divisible by 3;
/// 3. `{3j, 3j-2, 3j-3}` and `{3j, 3j-2, 3j-5}` for `2 <= j <= n`;
/// 4. `{3j, 3j-2, 3j+3}` and `{3j, 3j-2, 3j+1}` for `1 <= j <= n-1`;
/// 5. `{j, j+3, j+6}` for `1 <= j <= 3n-6`.
pub fn omega_prism(n: u32) -> Result<BTreeSet<Face>> {
    require_n("omega_prism", n)?;
    let mut out = BTreeSet::new();
    for j in 4..=3 * n - 1 {
        if j % 3 != 0 {
            triple(&mut out, j, j + 1, j - 3);
            triple(&mut out, j, j + 1, j - 2);
        }
    }
    for j in 1..=3 * n - 4 {
        if j % 3 != 0 {
            triple(&mut out, j, j + 1, j + 3);
            triple(&mut out, j, j + 1, j + 4);
        }
    }
    for j in 2..=n {
        triple(&mut out, 3 * j, 3 * j - 2, 3 * j - 3);
        triple(&mut out, 3 * j, 3 * j - 2, 3 * j - 5);
    }
    for j in 1..=n - 1 {
        triple(&mut out, 3 * j, 3 * j - 2, 3 * j + 3);
        triple(&mut out, 3 * j, 3 * j - 2, 3 * j + 1);
    }
    for j in 1..=3 * n - 6 {
        triple(&mut out, j, j + 3, j + 6);
    }
    Ok(out)
}

/// F-vector `(2n, 8n-10, 6n-10)` of the Gallai-simplicial complex of the
/// triangular ladder on `2n` vertices; its Euler characteristic is 0.
pub fn fvec_triangular_ladder(n: u32) -> Result<FVector> {
    require_n("fvec_triangular_ladder", n)?;
    let n = n as u64;
    Ok(FVector::new(vec![2 * n, 8 * n - 10, 6 * n - 10]))
}

/// F-vector `(3n, 15n-15, 15n-18)` of the Gallai-simplicial complex of the
/// prism on `3n` vertices; its Euler characteristic is `3(n-1)`.
pub fn fvec_prism(n: u32) -> Result<FVector> {
    require_n("fvec_prism", n)?;
    let n = n as u64;
    Ok(FVector::new(vec![3 * n, 15 * n - 15, 15 * n - 18]))
}
