//! Exact values known in closed form, used to cross-check the solver.

use crate::error::{Error, Result};

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

/// `γ_Zg(P_n)`: `⌈n/2⌉ − 1` when `n ≡ 3 (mod 4)`, otherwise `⌈n/2⌉`.
pub fn gamma_zg_path(n: usize) -> Result<u32> {
    if n < 2 {
        return Err(invalid(format!("path order must be >= 2, got {n}")));
    }
    let half = n.div_ceil(2) as u32;
    Ok(if n % 4 == 3 { half - 1 } else { half })
}

/// `γ_Zg(C_N^n)`: `⌈N/(n+1)⌉` when `N mod (2n+2) ≤ n+1`, otherwise one less.
pub fn gamma_zg_cycle_power(big_n: usize, n: usize) -> Result<u32> {
    if big_n < 3 || n < 1 {
        return Err(invalid(format!(
            "cycle power needs N >= 3 and n >= 1, got N={big_n}, n={n}"
        )));
    }
    let q = big_n.div_ceil(n + 1) as u32;
    Ok(if big_n % (2 * n + 2) <= n + 1 { q } else { q - 1 })
}

/// Common value `2m − 1` of the Z-, L- and LL-game D-game numbers of
/// `K_m □ K_n` for `m ≥ 2`, `n ≥ 2m − 1`.
pub fn game_values_hamming(m: usize, n: usize) -> Result<u32> {
    if m < 2 || n < 2 * m - 1 {
        return Err(invalid(format!("needs m >= 2 and n >= 2m - 1, got m={m}, n={n}")));
    }
    Ok(2 * m as u32 - 1)
}

/// Common value 3 of the Z-, L- and LL-game D-game numbers of the bridge
/// graph `G_{m,n}`.
pub fn game_values_bridge(m: usize, n: usize) -> Result<u32> {
    if m < 3 || n < 3 {
        return Err(invalid(format!("bridge graph needs m, n >= 3, got m={m}, n={n}")));
    }
    Ok(3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HatValues {
    pub gamma_zg: u32,
    pub gamma: u32,
    pub gamma_g: u32,
}

/// Values on the hat graph `Ĝ` of a connected `G` of order `n_g ≥ 3`.
pub fn hat_values(n_g: usize) -> Result<HatValues> {
    if n_g < 3 {
        return Err(invalid(format!("hat graph needs n(G) >= 3, got {n_g}")));
    }
    let n = n_g as u32;
    Ok(HatValues {
        gamma_zg: n + 1,
        gamma: n + 1,
        gamma_g: 2 * n + 1,
    })
}
