//! Game datum: battlefield values, budgets, validation and normalization.
//!
//! Values are rescaled so each player's valuations sum to one (rescaling by a
//! common factor does not change anyone's strategy), and player labels are
//! canonicalized so that `T_A >= T_B`; the swap is recorded so callers can
//! report results under the original labels.

use serde::{Deserialize, Serialize};

use crate::error::BlottoError;
use crate::Result;

/// Absolute tolerance on normalized value sums.
pub const SUM_TOL: f64 = 1e-12;

/// One of the two players.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Player {
    A,
    B,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::A => Player::B,
            Player::B => Player::A,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Player::A => "A",
            Player::B => "B",
        }
    }
}

/// A player label together with the canonicalization swap flag.
///
/// `swapped` is true iff the raw input had `T_A < T_B`, in which case the
/// datum's player A is the input's player B and vice versa.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlayerRole {
    pub player: Player,
    pub swapped: bool,
}

/// Validated, normalized, canonicalized description of a Blotto game.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GameDatum {
    n: usize,
    v_a: Vec<f64>,
    v_b: Vec<f64>,
    t_a: f64,
    t_b: f64,
    swapped: bool,
}

/// Compensated (Kahan) summation; keeps value sums accurate enough that the
/// 1e-12 normalization tolerance holds even for n up to 1e6.
pub(crate) fn kahan_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut c = 0.0;
    for v in values {
        let y = v - c;
        let t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    sum
}

fn normalize(values: &[f64]) -> Vec<f64> {
    let s = kahan_sum(values.iter().copied());
    if (s - 1.0).abs() <= SUM_TOL {
        // Already normalized; skipping the division makes validation idempotent.
        values.to_vec()
    } else {
        values.iter().map(|v| v / s).collect()
    }
}

/// Validate, normalize, and canonicalize a raw game description.
///
/// Both value vectors are rescaled to sum to one and labels are swapped if
/// needed so the richer player is A. Ties `T_A == T_B` are not swapped.
pub fn validate_game(
    raw_values_a: &[f64],
    raw_values_b: &[f64],
    budget_a: f64,
    budget_b: f64,
) -> Result<GameDatum> {
    let n = raw_values_a.len();
    if n != raw_values_b.len() || n < 2 {
        return Err(BlottoError::DimensionMismatch(n, raw_values_b.len()));
    }
    for (i, &v) in raw_values_a.iter().chain(raw_values_b.iter()).enumerate() {
        if !(v > 0.0) || !v.is_finite() {
            return Err(BlottoError::NonPositiveValue(i % n));
        }
    }
    if !(budget_a > 0.0) || !(budget_b > 0.0) || !budget_a.is_finite() || !budget_b.is_finite() {
        return Err(BlottoError::NonPositiveBudget);
    }

    let swapped = budget_a < budget_b;
    let (va, vb, ta, tb) = if swapped {
        (raw_values_b, raw_values_a, budget_b, budget_a)
    } else {
        (raw_values_a, raw_values_b, budget_a, budget_b)
    };
    Ok(GameDatum {
        n,
        v_a: normalize(va),
        v_b: normalize(vb),
        t_a: ta,
        t_b: tb,
        swapped,
    })
}

impl GameDatum {
    /// Number of battlefields.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Player A's normalized values (A is the canonicalized richer player).
    pub fn v_a(&self) -> &[f64] {
        &self.v_a
    }

    /// Player B's normalized values.
    pub fn v_b(&self) -> &[f64] {
        &self.v_b
    }

    pub fn t_a(&self) -> f64 {
        self.t_a
    }

    pub fn t_b(&self) -> f64 {
        self.t_b
    }

    /// True iff canonicalization exchanged the input labels.
    pub fn swapped(&self) -> bool {
        self.swapped
    }

    /// Values of the given (canonical) player.
    pub fn values(&self, player: Player) -> &[f64] {
        match player {
            Player::A => &self.v_a,
            Player::B => &self.v_b,
        }
    }

    /// Budget of the given (canonical) player.
    pub fn budget(&self, player: Player) -> f64 {
        match player {
            Player::A => self.t_a,
            Player::B => self.t_b,
        }
    }

    pub fn role(&self, player: Player) -> PlayerRole {
        PlayerRole { player, swapped: self.swapped }
    }

    /// True iff both players value every battlefield identically.
    pub fn symmetric_values(&self) -> bool {
        self.v_a == self.v_b
    }

    /// `max_i max(v_A,i/v_B,i, v_B,i/v_A,i)`, the value-imbalance constant.
    pub fn value_imbalance(&self) -> f64 {
        self.v_a
            .iter()
            .zip(&self.v_b)
            .map(|(&a, &b)| (a / b).max(b / a))
            .fold(0.0, f64::max)
    }
}

/// Chi-squared divergence `sum_i u_i^2 / v_i - 1` between probability vectors.
///
/// Nonnegative, zero iff `u == v`; controls the bracket for the equilibrium
/// exchange rate and the balancedness radius of the sufficient condition.
pub fn chi_squared(u: &[f64], v: &[f64]) -> Result<f64> {
    if u.len() != v.len() {
        return Err(BlottoError::DimensionMismatch(u.len(), v.len()));
    }
    for (i, &vi) in v.iter().enumerate() {
        if !(vi > 0.0) {
            return Err(BlottoError::ZeroEntry(i));
        }
    }
    let su = kahan_sum(u.iter().copied());
    let sv = kahan_sum(v.iter().copied());
    const PROB_TOL: f64 = 1e-9;
    if (su - 1.0).abs() > PROB_TOL || (sv - 1.0).abs() > PROB_TOL {
        return Err(BlottoError::NotAProbability(format!(
            "sums are {su} and {sv}"
        )));
    }
    let s = kahan_sum(u.iter().zip(v).map(|(&ui, &vi)| ui * ui / vi));
    Ok((s - 1.0).max(0.0))
}
