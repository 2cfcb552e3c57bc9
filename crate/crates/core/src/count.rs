use core::fmt;

use crate::error::{Error, Result};

/// An exact, nonnegative rectangle count. All arithmetic is checked.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Count(u128);

impl Count {
    pub const ZERO: Count = Count(0);
    pub const ONE: Count = Count(1);

    pub const fn new(value: u128) -> Self {
        Count(value)
    }

    pub const fn get(self) -> u128 {
        self.0
    }

    pub fn checked_add(self, rhs: Count) -> Result<Count> {
        self.0.checked_add(rhs.0).map(Count).ok_or(Error::Overflow)
    }

    pub fn checked_sub(self, rhs: Count) -> Result<Count> {
        self.0.checked_sub(rhs.0).map(Count).ok_or(Error::Overflow)
    }

    pub fn checked_mul(self, rhs: Count) -> Result<Count> {
        self.0.checked_mul(rhs.0).map(Count).ok_or(Error::Overflow)
    }

    /// Multiply by a small scalar coefficient.
    pub fn scale(self, k: u128) -> Result<Count> {
        self.0.checked_mul(k).map(Count).ok_or(Error::Overflow)
    }

    pub fn increment(&mut self) -> Result<()> {
        *self = self.checked_add(Count::ONE)?;
        Ok(())
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Self {
        Count(v as u128)
    }
}

impl From<u128> for Count {
    fn from(v: u128) -> Self {
        Count(v)
    }
}

impl PartialEq<u128> for Count {
    fn eq(&self, other: &u128) -> bool {
        self.0 == *other
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_is_an_error() {
        let max = Count::new(u128::MAX);
        assert_eq!(max.checked_add(Count::ONE), Err(Error::Overflow));
        assert_eq!(max.scale(2), Err(Error::Overflow));
        assert_eq!(Count::ZERO.checked_sub(Count::ONE), Err(Error::Overflow));
        assert_eq!(Count::new(6).scale(7).unwrap(), 42u128);
    }
}
