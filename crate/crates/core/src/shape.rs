//! Shape descriptors and the textual shape grammar.
//!
//! ```text
//! aztec:<n>
//! biscuit:<n>
//! staircase:<n>[:ul|ur|dl|dr]          (default dl)
//! aztec-half:<n>[:top|bottom|left|right] (default top)
//! biscuit-half:<n>[:larger|smaller]    (default larger)
//! ```
//!
//! Matching is ASCII case-insensitive. [`ShapeSpec`]'s `Display` always writes
//! the full lowercase form, so `parse_shape_spec(&spec.to_string()) == Ok(spec)`.

use alloc::format;
use alloc::string::ToString;
use core::fmt;

use crate::error::{Error, ParseError, Result};

/// Staircase orientation, named after the corner holding the right angle
/// (equivalently, where the longest row meets the aligned side).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    /// Longest row at the top, rows aligned left.
    UL,
    /// Longest row at the top, rows aligned right.
    UR,
    /// Longest row at the bottom, rows aligned left.
    DL,
    /// Longest row at the bottom, rows aligned right.
    DR,
}

impl Orientation {
    pub const ALL: [Orientation; 4] = [Self::UL, Self::UR, Self::DL, Self::DR];

    fn keyword(self) -> &'static str {
        match self {
            Self::UL => "ul",
            Self::UR => "ur",
            Self::DL => "dl",
            Self::DR => "dr",
        }
    }
}

/// Which half of an Aztec diamond.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Top,
    Bottom,
    Left,
    Right,
}

impl Side {
    pub const ALL: [Side; 4] = [Self::Top, Self::Bottom, Self::Left, Self::Right];

    fn keyword(self) -> &'static str {
        match self {
            Self::Top => "top",
            Self::Bottom => "bottom",
            Self::Left => "left",
            Self::Right => "right",
        }
    }
}

/// Which half of a square biscuit. The larger half keeps the middle row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    Larger,
    Smaller,
}

impl Part {
    pub const ALL: [Part; 2] = [Self::Larger, Self::Smaller];

    fn keyword(self) -> &'static str {
        match self {
            Self::Larger => "larger",
            Self::Smaller => "smaller",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Aztec,
    Biscuit,
    Staircase,
    AztecHalf,
    BiscuitHalf,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Self::Aztec,
        Self::Biscuit,
        Self::Staircase,
        Self::AztecHalf,
        Self::BiscuitHalf,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            Self::Aztec => "aztec",
            Self::Biscuit => "biscuit",
            Self::Staircase => "staircase",
            Self::AztecHalf => "aztec-half",
            Self::BiscuitHalf => "biscuit-half",
        }
    }

    fn from_keyword(s: &str) -> Option<Family> {
        Self::ALL
            .into_iter()
            .find(|f| f.keyword().eq_ignore_ascii_case(s))
    }
}

/// One member of a shape family. The order must be at least 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ShapeSpec {
    Aztec(u32),
    Biscuit(u32),
    Staircase(u32, Orientation),
    AztecHalf(u32, Side),
    BiscuitHalf(u32, Part),
}

impl ShapeSpec {
    pub fn order(&self) -> u32 {
        match *self {
            ShapeSpec::Aztec(n)
            | ShapeSpec::Biscuit(n)
            | ShapeSpec::Staircase(n, _)
            | ShapeSpec::AztecHalf(n, _)
            | ShapeSpec::BiscuitHalf(n, _) => n,
        }
    }

    pub fn family(&self) -> Family {
        match self {
            ShapeSpec::Aztec(_) => Family::Aztec,
            ShapeSpec::Biscuit(_) => Family::Biscuit,
            ShapeSpec::Staircase(..) => Family::Staircase,
            ShapeSpec::AztecHalf(..) => Family::AztecHalf,
            ShapeSpec::BiscuitHalf(..) => Family::BiscuitHalf,
        }
    }

    /// The family member of order `n` with the default variant.
    pub fn of_family(family: Family, n: u32) -> ShapeSpec {
        match family {
            Family::Aztec => ShapeSpec::Aztec(n),
            Family::Biscuit => ShapeSpec::Biscuit(n),
            Family::Staircase => ShapeSpec::Staircase(n, Orientation::DL),
            Family::AztecHalf => ShapeSpec::AztecHalf(n, Side::Top),
            Family::BiscuitHalf => ShapeSpec::BiscuitHalf(n, Part::Larger),
        }
    }

    /// Every variant of the family at order `n`.
    pub fn variants(family: Family, n: u32) -> alloc::vec::Vec<ShapeSpec> {
        match family {
            Family::Aztec => alloc::vec![ShapeSpec::Aztec(n)],
            Family::Biscuit => alloc::vec![ShapeSpec::Biscuit(n)],
            Family::Staircase => Orientation::ALL
                .iter()
                .map(|&o| ShapeSpec::Staircase(n, o))
                .collect(),
            Family::AztecHalf => Side::ALL
                .iter()
                .map(|&s| ShapeSpec::AztecHalf(n, s))
                .collect(),
            Family::BiscuitHalf => Part::ALL
                .iter()
                .map(|&p| ShapeSpec::BiscuitHalf(n, p))
                .collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.order() == 0 {
            return Err(Error::InvalidShape(format!(
                "{} needs order n >= 1, got 0",
                self.family().keyword()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ShapeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let family = self.family().keyword();
        let n = self.order();
        match *self {
            ShapeSpec::Aztec(_) | ShapeSpec::Biscuit(_) => write!(f, "{family}:{n}"),
            ShapeSpec::Staircase(_, o) => write!(f, "{family}:{n}:{}", o.keyword()),
            ShapeSpec::AztecHalf(_, s) => write!(f, "{family}:{n}:{}", s.keyword()),
            ShapeSpec::BiscuitHalf(_, p) => write!(f, "{family}:{n}:{}", p.keyword()),
        }
    }
}

impl core::str::FromStr for ShapeSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        parse_shape_spec(s)
    }
}

fn err(position: usize, message: impl ToString) -> ParseError {
    ParseError {
        position,
        message: message.to_string(),
    }
}

/// Parse the shape grammar described in the module docs.
pub fn parse_shape_spec(text: &str) -> core::result::Result<ShapeSpec, ParseError> {
    // (offset, token) pairs so errors can point into the original text
    let mut fields = alloc::vec::Vec::new();
    let mut start = 0;
    for piece in text.split(':') {
        fields.push((start, piece));
        start += piece.len() + 1;
    }

    let (_, family_text) = fields[0];
    if family_text.is_empty() {
        return Err(err(0, "expected a shape family"));
    }
    let family = Family::from_keyword(family_text).ok_or_else(|| {
        err(
            0,
            format!(
                "unknown shape family '{family_text}' \
                 (expected aztec, biscuit, staircase, aztec-half or biscuit-half)"
            ),
        )
    })?;

    let Some(&(n_pos, n_text)) = fields.get(1) else {
        return Err(err(text.len(), "expected ':<n>' after the family name"));
    };
    if n_text.is_empty() || !n_text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(
            n_pos,
            format!("expected a positive integer order, got '{n_text}'"),
        ));
    }
    let n: u32 = n_text
        .parse()
        .map_err(|_| err(n_pos, format!("order '{n_text}' is too large")))?;
    if n == 0 {
        return Err(err(n_pos, "order must be at least 1"));
    }

    if fields.len() > 3 {
        return Err(err(fields[3].0 - 1, "unexpected trailing input"));
    }
    let variant = fields.get(2).copied();
    let no_variant = |what: &str| match variant {
        Some((pos, v)) => Err(err(pos, format!("{what} takes no variant, got '{v}'"))),
        None => Ok(()),
    };
    let pick = |allowed: &[&str]| -> core::result::Result<Option<usize>, ParseError> {
        match variant {
            None => Ok(None),
            Some((pos, v)) => allowed
                .iter()
                .position(|k| k.eq_ignore_ascii_case(v))
                .map(Some)
                .ok_or_else(|| {
                    err(
                        pos,
                        format!(
                            "invalid variant '{v}' for {} (expected one of {})",
                            family.keyword(),
                            allowed.join(", ")
                        ),
                    )
                }),
        }
    };

    Ok(match family {
        Family::Aztec => {
            no_variant("aztec")?;
            ShapeSpec::Aztec(n)
        }
        Family::Biscuit => {
            no_variant("biscuit")?;
            ShapeSpec::Biscuit(n)
        }
        Family::Staircase => {
            let i = pick(&["ul", "ur", "dl", "dr"])?.unwrap_or(2);
            ShapeSpec::Staircase(n, Orientation::ALL[i])
        }
        Family::AztecHalf => {
            let i = pick(&["top", "bottom", "left", "right"])?.unwrap_or(0);
            ShapeSpec::AztecHalf(n, Side::ALL[i])
        }
        Family::BiscuitHalf => {
            let i = pick(&["larger", "smaller"])?.unwrap_or(0);
            ShapeSpec::BiscuitHalf(n, Part::ALL[i])
        }
    })
}
