//! Closed forms for the five rectangle-count sequences.
//!
//! | id      | counts rectangles in        | binomial form                       | polynomial form              |
//! |---------|-----------------------------|-------------------------------------|------------------------------|
//! | `S`     | staircase of order n        | C(n+3,4)                            | n(n+1)(n+2)(n+3) / 24        |
//! | `AHalf` | half Aztec diamond          | 3s(n) + s(n-1)                      | n(n+1)(n+2)^2 / 6            |
//! | `BHalf` | larger half square biscuit  | s(n) + 3s(n-1)                      | n^2(n+1)(n+2) / 6            |
//! | `A`     | Aztec diamond               | 9C(n+3,4) + 6C(n+2,4) + C(n+1,4)    | n(n+1)(4n^2+12n+11) / 6      |
//! | `B`     | square biscuit              | C(n+3,4) + 6C(n+2,4) + 9C(n+1,4)    | n(n+1)(4n^2-4n+3) / 6        |
//!
//! Each evaluation computes every available form and fails with
//! [`Error::FormDisagreement`] if they differ. `a` and `b` are additionally
//! checked against `3 a_half(n) + a_half(n-1)` and `b_half(n) + 3 b_half(n-1)`.

use core::fmt;

use num_integer::Integer;

use crate::count::Count;
use crate::error::{Error, Result};
use crate::shape::{Part, ShapeSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SequenceId {
    S,
    AHalf,
    BHalf,
    A,
    B,
}

impl SequenceId {
    pub const ALL: [SequenceId; 5] = [Self::S, Self::AHalf, Self::BHalf, Self::A, Self::B];

    /// The OEIS entry each sequence is identified with.
    pub fn oeis_id(self) -> Option<&'static str> {
        match self {
            Self::S => None,
            Self::AHalf => Some("A004320"),
            Self::BHalf => Some("A002417"),
            Self::A => Some("A330805"),
            Self::B => Some("A213840"),
        }
    }

    pub fn from_oeis_id(id: &str) -> Option<SequenceId> {
        Self::ALL.into_iter().find(|s| s.oeis_id() == Some(id))
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::S => "s",
            Self::AHalf => "a_half",
            Self::BHalf => "b_half",
            Self::A => "a",
            Self::B => "b",
        }
    }

    /// Smallest `n` accepted by [`evaluate`].
    pub fn first_index(self) -> u64 {
        match self {
            Self::S => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `C(n, k)`, zero when `k > n`.
///
/// Uses `C(n, i+1) = C(n, i) * (n-i) / (i+1)` with the gcd cancelled first, so
/// intermediates never exceed the final value times `k`.
pub fn binomial(n: u64, k: u64) -> Result<Count> {
    if k > n {
        return Ok(Count::ZERO);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        let num = u128::from(n - i);
        let den = u128::from(i + 1);
        let g = acc.gcd(&den);
        acc = (acc / g)
            .checked_mul(num / (den / g))
            .ok_or(Error::Overflow)?;
    }
    Ok(Count::new(acc))
}

fn wide(n: u64) -> u128 {
    u128::from(n)
}

/// Product of the factors, divided by `divisor` once at the end.
fn exact_quotient(factors: &[u128], divisor: u128) -> Result<Count> {
    let product = factors
        .iter()
        .try_fold(1u128, |acc, &f| acc.checked_mul(f))
        .ok_or(Error::Overflow)?;
    debug_assert_eq!(product % divisor, 0);
    Ok(Count::new(product / divisor))
}

fn agree(sequence: SequenceId, n: u64, forms: &[Count]) -> Result<Count> {
    let first = forms[0];
    if forms.iter().any(|&f| f != first) {
        return Err(Error::FormDisagreement { sequence, n });
    }
    Ok(first)
}

/// Sum of binomial coefficients form of sequence `id` at `n`. Half sequences
/// use `s`, which is itself a single binomial coefficient.
pub fn binomial_form(id: SequenceId, n: u64) -> Result<Count> {
    let c = |top: u64| binomial(top, 4);
    n.checked_add(3).ok_or(Error::Overflow)?;
    let prev_s = |n: u64| if n == 0 { Ok(Count::ZERO) } else { c(n + 2) };
    match id {
        SequenceId::S => c(n + 3),
        SequenceId::AHalf => c(n + 3)?.scale(3)?.checked_add(prev_s(n)?),
        SequenceId::BHalf => c(n + 3)?.checked_add(prev_s(n)?.scale(3)?),
        SequenceId::A => c(n + 3)?
            .scale(9)?
            .checked_add(c(n + 2)?.scale(6)?)?
            .checked_add(c(n + 1)?),
        SequenceId::B => c(n + 3)?
            .checked_add(c(n + 2)?.scale(6)?)?
            .checked_add(c(n + 1)?.scale(9)?),
    }
}

/// Factored polynomial form of sequence `id` at `n`.
pub fn polynomial_form(id: SequenceId, n: u64) -> Result<Count> {
    let m = wide(n);
    match id {
        SequenceId::S => exact_quotient(&[m, m + 1, m + 2, m + 3], 24),
        SequenceId::AHalf => exact_quotient(&[m, m + 1, m + 2, m + 2], 6),
        SequenceId::BHalf => exact_quotient(&[m, m, m + 1, m + 2], 6),
        SequenceId::A => {
            let quartic = (4 * m)
                .checked_mul(m)
                .and_then(|v| v.checked_add(12 * m + 11))
                .ok_or(Error::Overflow)?;
            exact_quotient(&[m, m + 1, quartic], 6)
        }
        SequenceId::B => {
            if n == 0 {
                return Ok(Count::ZERO);
            }
            // 4n^2 - 4n + 3 = 4n(n-1) + 3 stays unsigned
            let quadratic = (4 * m)
                .checked_mul(m - 1)
                .and_then(|v| v.checked_add(3))
                .ok_or(Error::Overflow)?;
            exact_quotient(&[m, m + 1, quadratic], 6)
        }
    }
}

/// Rectangles in a staircase of order `n`; `s(0) = 0`.
pub fn s(n: u64) -> Result<Count> {
    binomial_form(SequenceId::S, n)
}

/// Rectangles in half an Aztec diamond; `a_half(0) = 0`.
pub fn a_half(n: u64) -> Result<Count> {
    if n == 0 {
        return Ok(Count::ZERO);
    }
    let forms = [
        binomial_form(SequenceId::AHalf, n)?,
        polynomial_form(SequenceId::AHalf, n)?,
    ];
    agree(SequenceId::AHalf, n, &forms)
}

/// Rectangles in the larger half of a square biscuit; `b_half(0) = 0`.
pub fn b_half(n: u64) -> Result<Count> {
    if n == 0 {
        return Ok(Count::ZERO);
    }
    let forms = [
        binomial_form(SequenceId::BHalf, n)?,
        polynomial_form(SequenceId::BHalf, n)?,
    ];
    agree(SequenceId::BHalf, n, &forms)
}

/// Rectangles in an Aztec diamond of order `n >= 1`.
pub fn a(n: u64) -> Result<Count> {
    if n == 0 {
        return Err(Error::OutOfDomain {
            sequence: SequenceId::A,
            n,
        });
    }
    let forms = [
        binomial_form(SequenceId::A, n)?,
        polynomial_form(SequenceId::A, n)?,
        a_half(n)?.scale(3)?.checked_add(a_half(n - 1)?)?,
    ];
    agree(SequenceId::A, n, &forms)
}

/// Rectangles in a square biscuit of order `n >= 1`.
pub fn b(n: u64) -> Result<Count> {
    if n == 0 {
        return Err(Error::OutOfDomain {
            sequence: SequenceId::B,
            n,
        });
    }
    let forms = [
        binomial_form(SequenceId::B, n)?,
        polynomial_form(SequenceId::B, n)?,
        b_half(n)?.checked_add(b_half(n - 1)?.scale(3)?)?,
    ];
    agree(SequenceId::B, n, &forms)
}

/// Evaluate a sequence; `n` must be at least [`SequenceId::first_index`].
pub fn evaluate(id: SequenceId, n: u64) -> Result<Count> {
    if n < id.first_index() {
        return Err(Error::OutOfDomain { sequence: id, n });
    }
    match id {
        SequenceId::S => s(n),
        SequenceId::AHalf => a_half(n),
        SequenceId::BHalf => b_half(n),
        SequenceId::A => a(n),
        SequenceId::B => b(n),
    }
}

/// The sequence and index that count the rectangles of `spec`.
pub fn sequence_for(spec: &ShapeSpec) -> (SequenceId, u64) {
    let n = u64::from(spec.order());
    match spec {
        ShapeSpec::Aztec(_) => (SequenceId::A, n),
        ShapeSpec::Biscuit(_) => (SequenceId::B, n),
        ShapeSpec::Staircase(..) => (SequenceId::S, n),
        ShapeSpec::AztecHalf(..) => (SequenceId::AHalf, n),
        ShapeSpec::BiscuitHalf(_, Part::Larger) => (SequenceId::BHalf, n),
        ShapeSpec::BiscuitHalf(_, Part::Smaller) => (SequenceId::BHalf, n - 1),
    }
}

/// Closed-form rectangle count for a shape.
pub fn for_shape(spec: &ShapeSpec) -> Result<Count> {
    spec.validate()?;
    let (id, n) = sequence_for(spec);
    match id {
        // the smaller biscuit half of order 1 is empty
        SequenceId::BHalf => b_half(n),
        _ => evaluate(id, n),
    }
}
