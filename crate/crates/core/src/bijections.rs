//! The counting arguments as explicit invertible maps, with an exhaustive
//! checker.
//!
//! Frames are fixed once: the half Aztec diamond is `AztecHalf(n, top)` with
//! its axis on `x = 0`; the larger biscuit half is `BiscuitHalf(n, larger)`
//! with its axis on `x = 1/2`; staircases are the canonical DL staircase with
//! the right angle at the origin.
//!
//! | name             | domain                                              | codomain                                          | size            |
//! |------------------|-----------------------------------------------------|---------------------------------------------------|-----------------|
//! | `quadruple`      | rectangles in `Staircase(n, DL)`                    | `0 <= a < b < c < d <= n+2`                       | C(n+3, 4)       |
//! | `type_l`         | left-heavy crossing rectangles of the half diamond  | rectangles in the order `n-1` staircase at `x=1`  | s(n-1)          |
//! | `type_r`         | right-heavy crossing rectangles (mirror of `type_l`)| rectangles in the order `n-1` staircase at `x=1`  | s(n-1)          |
//! | `type_c`         | bisected rectangles of the half diamond             | staircase rectangles with left side on `x = 0`    | s(n) - s(n-1)   |
//! | `biscuit_expand` | rectangles of the biscuit half crossing `x = 1/2`   | rectangles of the half diamond crossing `x = 0`   | s(n) + s(n-1)   |

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::count::Count;
use crate::counting::{classify, rects_in, CrossingClass};
use crate::error::{Error, Result};
use crate::geometry::{build, contains_rect, staircase, Axis, CellRegion, LatticeRect};
use crate::shape::{Orientation, Part, ShapeSpec, Side};

/// Largest order the exhaustive checker accepts.
pub const MAX_VERIFY_ORDER: u64 = 20;

/// Names accepted by [`verify_bijection`].
pub const MAP_NAMES: [&str; 5] = ["quadruple", "type_l", "type_r", "type_c", "biscuit_expand"];

const DELTA: Axis = Axis::LatticeVertical(0);
const BISCUIT_AXIS: Axis = Axis::HalfVertical(0);

/// Strictly increasing integers `0 <= a < b < c < d <= n + 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quadruple {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Quadruple {
    pub fn is_valid_for(&self, n: u32) -> bool {
        0 <= self.a
            && self.a < self.b
            && self.b < self.c
            && self.c < self.d
            && self.d <= n as i64 + 2
    }
}

impl fmt::Display for Quadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.b, self.c, self.d)
    }
}

fn outside(what: &str, r: &impl fmt::Display) -> Error {
    Error::NotInDomain(format!("{r} is not {what}"))
}

fn half_diamond(n: u32) -> Result<CellRegion> {
    build(&ShapeSpec::AztecHalf(n, Side::Top))
}

/// The order `n-1` staircase obtained by cutting the half diamond one unit
/// right of its axis: DL staircase with its corner at `(1, 0)`.
fn shifted_staircase(n: u32) -> CellRegion {
    staircase(n.saturating_sub(1), Orientation::DL).translate(1, 0)
}

/// Encode a rectangle of the canonical DL staircase of order `n`.
///
/// The staircase is placed by `(x, y) -> (x, n + 2 - y)`, which puts its cells
/// at `0 <= i` and `i + 2 <= j <= n + 1`, under the line `y = x + 1` with the
/// longest row on top. There a rectangle `[a, b] x [c, d]` is contained iff
/// `0 <= a < b`, `b + 1 <= c < d <= n + 2`, i.e. iff `(a, b, c, d)` is strictly
/// increasing in `0..=n+2`.
pub fn staircase_to_quadruple(r: &LatticeRect, n: u32) -> Result<Quadruple> {
    if !contains_rect(&staircase(n, Orientation::DL), r) {
        return Err(outside("inside the staircase", r));
    }
    let top = n as i64 + 2;
    Ok(Quadruple {
        a: r.a(),
        b: r.b(),
        c: top - r.d(),
        d: top - r.c(),
    })
}

pub fn quadruple_to_staircase(q: &Quadruple, n: u32) -> Result<LatticeRect> {
    if !q.is_valid_for(n) {
        return Err(outside("a strictly increasing quadruple in range", q));
    }
    let top = n as i64 + 2;
    LatticeRect::new(q.a, q.b, top - q.d, top - q.c)
}

/// All quadruples for order `n`, lexicographically.
pub fn quadruples(n: u32) -> Vec<Quadruple> {
    let top = n as i64 + 2;
    let mut out = Vec::new();
    for a in 0..=top {
        for b in a + 1..=top {
            for c in b + 1..=top {
                for d in c + 1..=top {
                    out.push(Quadruple { a, b, c, d });
                }
            }
        }
    }
    out
}

fn is_in_half(r: &LatticeRect, n: u32) -> Result<bool> {
    Ok(contains_rect(&half_diamond(n)?, r))
}

/// Reflect the left part across the axis and keep what sticks out past the
/// right part: `[a, b] x [c, d] -> [b, -a] x [c, d]`.
pub fn type_l_map(r: &LatticeRect, n: u32) -> Result<LatticeRect> {
    if classify(r, DELTA) != CrossingClass::L || !is_in_half(r, n)? {
        return Err(outside("a type-L rectangle of the half diamond", r));
    }
    LatticeRect::new(r.b(), -r.a(), r.c(), r.d())
}

pub fn type_l_unmap(r: &LatticeRect, n: u32) -> Result<LatticeRect> {
    if !contains_rect(&shifted_staircase(n), r) {
        return Err(outside("inside the shifted staircase", r));
    }
    LatticeRect::new(-r.b(), r.a(), r.c(), r.d())
}

/// Mirror image of [`type_l_map`] for right-heavy rectangles.
pub fn type_r_map(r: &LatticeRect, n: u32) -> Result<LatticeRect> {
    if classify(r, DELTA) != CrossingClass::R {
        return Err(outside("a type-R rectangle", r));
    }
    type_l_map(&r.mirror(), n)
}

pub fn type_r_unmap(r: &LatticeRect, n: u32) -> Result<LatticeRect> {
    type_l_unmap(r, n).map(|l| l.mirror())
}

/// A bisected rectangle is determined by its right half.
pub fn type_c_anchor(r: &LatticeRect) -> Result<LatticeRect> {
    if classify(r, DELTA) != CrossingClass::C {
        return Err(outside("a type-C rectangle", r));
    }
    LatticeRect::new(0, r.b(), r.c(), r.d())
}

pub fn type_c_unanchor(r: &LatticeRect) -> Result<LatticeRect> {
    if r.a() != 0 {
        return Err(outside("anchored on the axis", r));
    }
    LatticeRect::new(-r.b(), r.b(), r.c(), r.d())
}

/// Insert a column left of the biscuit axis: `[a, b] -> [a - 1, b]`.
pub fn biscuit_expand_map(r: &LatticeRect, n: u32) -> Result<LatticeRect> {
    let half = build(&ShapeSpec::BiscuitHalf(n, Part::Larger))?;
    if classify(r, BISCUIT_AXIS) == CrossingClass::NonCrossing || !contains_rect(&half, r) {
        return Err(outside("a crossing rectangle of the biscuit half", r));
    }
    LatticeRect::new(r.a() - 1, r.b(), r.c(), r.d())
}

pub fn biscuit_expand_unmap(r: &LatticeRect, n: u32) -> Result<LatticeRect> {
    if classify(r, DELTA) == CrossingClass::NonCrossing || !is_in_half(r, n)? {
        return Err(outside("a crossing rectangle of the half diamond", r));
    }
    LatticeRect::new(r.a() + 1, r.b(), r.c(), r.d())
}

/// A domain or codomain element, for counterexamples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Element {
    Rect(LatticeRect),
    Quad(Quadruple),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Rect(r) => r.fmt(f),
            Element::Quad(q) => q.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub reason: String,
    pub input: Element,
    pub output: Option<Element>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub name: String,
    pub order: u32,
    pub domain_size: Count,
    pub image_size: Count,
    pub is_injective: bool,
    pub is_surjective: bool,
    pub roundtrip_ok: bool,
    pub counterexample: Option<Counterexample>,
}

impl BijectionReport {
    pub fn verified(&self) -> bool {
        self.is_injective
            && self.is_surjective
            && self.roundtrip_ok
            && self.domain_size == self.image_size
    }
}

trait AsElement: Copy + Ord {
    fn element(self) -> Element;
}

impl AsElement for LatticeRect {
    fn element(self) -> Element {
        Element::Rect(self)
    }
}

impl AsElement for Quadruple {
    fn element(self) -> Element {
        Element::Quad(self)
    }
}

/// Check `forward`/`backward` are mutually inverse bijections between two
/// finite sets.
fn check<X: AsElement, Y: AsElement>(
    name: &str,
    order: u32,
    domain: &[X],
    codomain: &[Y],
    forward: impl Fn(&X) -> Result<Y>,
    backward: impl Fn(&Y) -> Result<X>,
) -> BijectionReport {
    let codomain_set: BTreeSet<Y> = codomain.iter().copied().collect();
    let mut report = BijectionReport {
        name: name.to_string(),
        order,
        domain_size: Count::new(domain.len() as u128),
        image_size: Count::new(codomain_set.len() as u128),
        is_injective: true,
        is_surjective: true,
        roundtrip_ok: true,
        counterexample: None,
    };
    let fail =
        |report: &mut BijectionReport, reason: &str, input: Element, output: Option<Element>| {
            if report.counterexample.is_none() {
                report.counterexample = Some(Counterexample {
                    reason: reason.to_string(),
                    input,
                    output,
                });
            }
        };

    let mut images = BTreeSet::new();
    for x in domain {
        match forward(x) {
            Ok(y) => {
                if !codomain_set.contains(&y) {
                    report.is_surjective = false;
                    fail(
                        &mut report,
                        "image outside the codomain",
                        x.element(),
                        Some(y.element()),
                    );
                }
                if !images.insert(y) {
                    report.is_injective = false;
                    fail(
                        &mut report,
                        "two inputs share an image",
                        x.element(),
                        Some(y.element()),
                    );
                }
                if backward(&y).ok() != Some(*x) {
                    report.roundtrip_ok = false;
                    fail(
                        &mut report,
                        "inverse does not recover the input",
                        x.element(),
                        Some(y.element()),
                    );
                }
            }
            Err(_) => {
                report.roundtrip_ok = false;
                fail(
                    &mut report,
                    "map rejected a domain element",
                    x.element(),
                    None,
                );
            }
        }
    }
    for y in codomain {
        if !images.contains(y) {
            report.is_surjective = false;
            fail(
                &mut report,
                "codomain element is never hit",
                y.element(),
                None,
            );
        }
        match backward(y).and_then(|x| forward(&x).map(|back| (x, back))) {
            Ok((_, back)) if back == *y => {}
            Ok((x, _)) => {
                report.roundtrip_ok = false;
                fail(
                    &mut report,
                    "forward does not undo the inverse",
                    y.element(),
                    Some(x.element()),
                );
            }
            Err(_) => {
                report.roundtrip_ok = false;
                fail(
                    &mut report,
                    "inverse rejected a codomain element",
                    y.element(),
                    None,
                );
            }
        }
    }
    report
}

fn filtered(region: &CellRegion, keep: impl Fn(&LatticeRect) -> bool) -> Vec<LatticeRect> {
    rects_in(region).into_iter().filter(|r| keep(r)).collect()
}

/// Exhaustively verify one of the [`MAP_NAMES`] at order `n`.
pub fn verify_bijection(name: &str, n: u32) -> Result<BijectionReport> {
    if !MAP_NAMES.contains(&name) {
        return Err(Error::UnknownMap(name.to_string()));
    }
    if n == 0 || u64::from(n) > MAX_VERIFY_ORDER {
        return Err(Error::GuardExceeded {
            n: u64::from(n),
            limit: MAX_VERIFY_ORDER,
        });
    }
    let report = match name {
        "quadruple" => {
            let domain = rects_in(&staircase(n, Orientation::DL));
            check(
                name,
                n,
                &domain,
                &quadruples(n),
                |r| staircase_to_quadruple(r, n),
                |q| quadruple_to_staircase(q, n),
            )
        }
        "type_l" | "type_r" => {
            let class = if name == "type_l" {
                CrossingClass::L
            } else {
                CrossingClass::R
            };
            let domain = filtered(&half_diamond(n)?, |r| classify(r, DELTA) == class);
            let codomain = rects_in(&shifted_staircase(n));
            if name == "type_l" {
                check(
                    name,
                    n,
                    &domain,
                    &codomain,
                    |r| type_l_map(r, n),
                    |r| type_l_unmap(r, n),
                )
            } else {
                check(
                    name,
                    n,
                    &domain,
                    &codomain,
                    |r| type_r_map(r, n),
                    |r| type_r_unmap(r, n),
                )
            }
        }
        "type_c" => {
            let domain = filtered(&half_diamond(n)?, |r| {
                classify(r, DELTA) == CrossingClass::C
            });
            let codomain = filtered(&staircase(n, Orientation::DL), |r| r.a() == 0);
            check(name, n, &domain, &codomain, type_c_anchor, type_c_unanchor)
        }
        _ => {
            let biscuit = build(&ShapeSpec::BiscuitHalf(n, Part::Larger))?;
            let domain = filtered(&biscuit, |r| {
                classify(r, BISCUIT_AXIS) != CrossingClass::NonCrossing
            });
            let codomain = filtered(&half_diamond(n)?, |r| {
                classify(r, DELTA) != CrossingClass::NonCrossing
            });
            check(
                name,
                n,
                &domain,
                &codomain,
                |r| biscuit_expand_map(r, n),
                |r| biscuit_expand_unmap(r, n),
            )
        }
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{binomial, s};

    fn rect(a: i64, b: i64, c: i64, d: i64) -> LatticeRect {
        LatticeRect::new(a, b, c, d).unwrap()
    }

    #[test]
    fn quadruple_examples() {
        let unit = rect(0, 1, 0, 1);
        let q = staircase_to_quadruple(&unit, 1).unwrap();
        assert_eq!(
            q,
            Quadruple {
                a: 0,
                b: 1,
                c: 2,
                d: 3
            }
        );
        assert_eq!(quadruple_to_staircase(&q, 1).unwrap(), unit);
        assert_eq!(quadruples(2).len(), 5);
        assert_eq!(rects_in(&staircase(2, Orientation::DL)).len(), 5);
        assert!(staircase_to_quadruple(&rect(0, 2, 0, 2), 2).is_err());
        assert!(quadruple_to_staircase(
            &Quadruple {
                a: 0,
                b: 2,
                c: 2,
                d: 3
            },
            2
        )
        .is_err());
        assert!(quadruple_to_staircase(
            &Quadruple {
                a: 0,
                b: 1,
                c: 2,
                d: 5
            },
            2
        )
        .is_err());
    }

    #[test]
    fn type_l_examples() {
        assert_eq!(type_l_map(&rect(-3, 2, 1, 3), 7).unwrap(), rect(2, 3, 1, 3));
        assert_eq!(
            type_l_unmap(&rect(2, 3, 1, 3), 7).unwrap(),
            rect(-3, 2, 1, 3)
        );
        assert_eq!(type_l_map(&rect(-2, 1, 0, 1), 2).unwrap(), rect(1, 2, 0, 1));
        assert_eq!(
            type_l_unmap(&rect(1, 2, 0, 1), 2).unwrap(),
            rect(-2, 1, 0, 1)
        );
        let half = half_diamond(2).unwrap();
        let type_l: Vec<_> = rects_in(&half)
            .into_iter()
            .filter(|r| classify(r, DELTA) == CrossingClass::L)
            .collect();
        assert_eq!(type_l, alloc::vec![rect(-2, 1, 0, 1)]);
        // not type L, or not contained
        assert!(type_l_map(&rect(-1, 2, 0, 1), 2).is_err());
        assert!(type_l_map(&rect(-3, 1, 0, 1), 2).is_err());
        assert!(type_l_unmap(&rect(0, 1, 0, 1), 2).is_err());
    }

    #[test]
    fn type_c_examples() {
        assert_eq!(type_c_anchor(&rect(-2, 2, 0, 1)).unwrap(), rect(0, 2, 0, 1));
        assert_eq!(
            type_c_unanchor(&rect(0, 2, 0, 1)).unwrap(),
            rect(-2, 2, 0, 1)
        );
        assert!(type_c_anchor(&rect(-2, 1, 0, 1)).is_err());
        for n in 1..=12u32 {
            let anchored = filtered(&staircase(n, Orientation::DL), |r| r.a() == 0).len() as u128;
            let expected = s(n as u64).unwrap().get() - s(n as u64 - 1).unwrap().get();
            assert_eq!(anchored, expected);
        }
    }

    #[test]
    fn biscuit_expand_examples() {
        assert_eq!(
            biscuit_expand_map(&rect(-1, 3, 1, 3), 6).unwrap(),
            rect(-2, 3, 1, 3)
        );
        assert_eq!(
            biscuit_expand_unmap(&rect(-2, 3, 1, 3), 6).unwrap(),
            rect(-1, 3, 1, 3)
        );
        assert!(biscuit_expand_map(&rect(1, 3, 1, 2), 6).is_err());
        let report = verify_bijection("biscuit_expand", 2).unwrap();
        assert!(report.verified());
        assert_eq!(report.domain_size, 6u128);
    }

    #[test]
    fn verify_examples() {
        let r = verify_bijection("quadruple", 5).unwrap();
        assert!(r.verified(), "{r:?}");
        assert_eq!(r.domain_size, 70u128);
        let r = verify_bijection("type_l", 2).unwrap();
        assert!(r.verified());
        assert_eq!(r.domain_size, 1u128);
        let r = verify_bijection("biscuit_expand", 1).unwrap();
        assert!(r.verified());
        assert_eq!(r.domain_size, 1u128);
        let r = verify_bijection("type_l", 1).unwrap();
        assert!(r.verified());
        assert_eq!(r.domain_size, 0u128);
        assert!(matches!(
            verify_bijection("nosuch", 3),
            Err(Error::UnknownMap(_))
        ));
        assert!(matches!(
            verify_bijection("quadruple", 21),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn all_maps_are_bijections_up_to_twelve() {
        for n in 1..=12u32 {
            let m = n as u64;
            let sn = s(m).unwrap().get();
            let sp = s(m - 1).unwrap().get();
            for name in MAP_NAMES {
                let report = verify_bijection(name, n).unwrap();
                assert!(
                    report.verified(),
                    "{name} n={n}: {:?}",
                    report.counterexample
                );
                let expected = match name {
                    "quadruple" => binomial(m + 3, 4).unwrap().get(),
                    "type_l" | "type_r" => sp,
                    "type_c" => sn - sp,
                    _ => sn + sp,
                };
                assert_eq!(report.domain_size.get(), expected, "{name} n={n}");
            }
        }
    }

    #[test]
    fn broken_map_yields_counterexample() {
        let domain = rects_in(&staircase(2, Orientation::DL));
        let codomain = quadruples(2);
        let report = check(
            "broken",
            2,
            &domain,
            &codomain,
            |_| {
                Ok(Quadruple {
                    a: 0,
                    b: 1,
                    c: 2,
                    d: 3,
                })
            },
            |q| quadruple_to_staircase(q, 2),
        );
        assert!(!report.verified());
        assert!(!report.is_injective);
        assert!(!report.is_surjective);
        assert!(report.counterexample.is_some());
    }
}
