//! Cell regions, lattice rectangles and the shape constructions.
//!
//! Canonical placement: the center of an Aztec diamond and the quasi-center of
//! a square biscuit sit at the origin. Cell `(i, j)` is the unit square
//! `[i, i+1] x [j, j+1]`. With this frame:
//!
//! * the Aztec diamond's vertical symmetry axis is the lattice line `x = 0`;
//! * the biscuit's true center is `(1/2, 1/2)`, so its vertical symmetry axis
//!   is the half-integer line `x = 1/2`, which runs through the middle column;
//! * the four quadrants around the origin are the canonical homes of the four
//!   staircase orientations: DL in `x >= 0, y >= 0`, DR in `x < 0, y >= 0`,
//!   UR in `x < 0, y < 0` and UL in `x >= 0, y < 0`. An Aztec diamond of order
//!   `n` is exactly the union of the four order-`n` staircases.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::shape::{Orientation, Part, ShapeSpec, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub i: i64,
    pub j: i64,
}

/// The lattice rectangle `[a, b] x [c, d]` with `a < b` and `c < d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeRect {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl LatticeRect {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if a < b && c < d {
            Ok(LatticeRect { a, b, c, d })
        } else {
            Err(Error::InvalidRect { a, b, c, d })
        }
    }

    /// Left edge.
    pub fn a(&self) -> i64 {
        self.a
    }
    /// Right edge.
    pub fn b(&self) -> i64 {
        self.b
    }
    /// Bottom edge.
    pub fn c(&self) -> i64 {
        self.c
    }
    /// Top edge.
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn width(&self) -> i64 {
        self.b - self.a
    }

    pub fn height(&self) -> i64 {
        self.d - self.c
    }

    /// Mirror image in the vertical line `x = 0`.
    pub fn mirror(&self) -> LatticeRect {
        LatticeRect {
            a: -self.b,
            b: -self.a,
            c: self.c,
            d: self.d,
        }
    }
}

impl core::fmt::Display for LatticeRect {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "[{},{}]x[{},{}]", self.a, self.b, self.c, self.d)
    }
}

/// A vertical line used to split or classify rectangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    /// The lattice line `x = x0`.
    LatticeVertical(i64),
    /// The line `x = x0 + 1/2`, which is not a lattice line.
    HalfVertical(i64),
}

impl Axis {
    /// Twice the x coordinate of the line.
    pub fn doubled_x(&self) -> i64 {
        match *self {
            Axis::LatticeVertical(x) => 2 * x,
            Axis::HalfVertical(x) => 2 * x + 1,
        }
    }
}

/// One row of a region: cells `lo..hi` of row `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Span {
    lo: i64,
    hi: i64,
}

/// A finite set of unit cells, one contiguous run per row, over a contiguous
/// range of rows.
///
/// `origin` records where the shape's center (or quasi-center) sits. It is
/// `(0, 0)` for canonical placements and moves with [`CellRegion::translate`]
/// and [`transform`]; equality compares cells only.
#[derive(Clone, Debug, Default)]
pub struct CellRegion {
    first_row: i64,
    rows: Vec<Span>,
    origin: (i64, i64),
}

impl PartialEq for CellRegion {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && (self.rows.is_empty() || self.first_row == other.first_row)
    }
}

impl Eq for CellRegion {}

impl CellRegion {
    pub fn empty() -> Self {
        CellRegion::default()
    }

    /// Build from `(lo, hi)` column runs for rows `first_row, first_row + 1, ...`.
    pub fn from_rows(first_row: i64, rows: impl IntoIterator<Item = (i64, i64)>) -> Result<Self> {
        let rows: Vec<Span> = rows.into_iter().map(|(lo, hi)| Span { lo, hi }).collect();
        if rows.iter().any(|s| s.lo >= s.hi) {
            return Err(Error::InvalidRegion(
                "every row must hold at least one cell",
            ));
        }
        Ok(CellRegion {
            first_row: if rows.is_empty() { 0 } else { first_row },
            rows,
            origin: (0, 0),
        })
    }

    /// Collect an arbitrary cell set; fails unless it is row-convex with no
    /// empty rows in between.
    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let mut by_row: BTreeMap<i64, (i64, i64, u64)> = BTreeMap::new();
        let mut seen = alloc::collections::BTreeSet::new();
        for cell in cells {
            if !seen.insert(cell) {
                continue;
            }
            let e = by_row.entry(cell.j).or_insert((cell.i, cell.i, 0));
            e.0 = e.0.min(cell.i);
            e.1 = e.1.max(cell.i);
            e.2 += 1;
        }
        let Some((&first, _)) = by_row.iter().next() else {
            return Ok(CellRegion::empty());
        };
        let mut rows = Vec::with_capacity(by_row.len());
        for (k, (&j, &(lo, hi, count))) in by_row.iter().enumerate() {
            if j != first + k as i64 || (hi - lo + 1) as u64 != count {
                return Err(Error::NotRowConvex);
            }
            rows.push(Span { lo, hi: hi + 1 });
        }
        Ok(CellRegion {
            first_row: first,
            rows,
            origin: (0, 0),
        })
    }

    pub fn with_origin(mut self, origin: (i64, i64)) -> Self {
        self.origin = origin;
        self
    }

    pub fn origin(&self) -> (i64, i64) {
        self.origin
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn first_row(&self) -> i64 {
        self.first_row
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    /// Iterate `(j, lo, hi)` from the bottom row up.
    pub fn rows(
        &self,
    ) -> impl DoubleEndedIterator<Item = (i64, i64, i64)> + ExactSizeIterator + '_ {
        self.rows
            .iter()
            .enumerate()
            .map(move |(k, s)| (self.first_row + k as i64, s.lo, s.hi))
    }

    pub fn row(&self, j: i64) -> Option<(i64, i64)> {
        let k = usize::try_from(j.checked_sub(self.first_row)?).ok()?;
        self.rows.get(k).map(|s| (s.lo, s.hi))
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        matches!(self.row(cell.j), Some((lo, hi)) if lo <= cell.i && cell.i < hi)
    }

    pub fn cell_count(&self) -> u64 {
        self.rows.iter().map(|s| (s.hi - s.lo) as u64).sum()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows()
            .flat_map(|(j, lo, hi)| (lo..hi).map(move |i| Cell { i, j }))
    }

    pub fn translate(&self, dx: i64, dy: i64) -> CellRegion {
        CellRegion {
            first_row: if self.rows.is_empty() {
                0
            } else {
                self.first_row + dy
            },
            rows: self
                .rows
                .iter()
                .map(|s| Span {
                    lo: s.lo + dx,
                    hi: s.hi + dx,
                })
                .collect(),
            origin: (self.origin.0 + dx, self.origin.1 + dy),
        }
    }

    /// Translate so the bounding box starts at `(0, 0)`.
    pub fn normalized(&self) -> CellRegion {
        match bounding_box(self) {
            Ok(bb) => self.translate(-bb.a(), -bb.c()),
            Err(_) => CellRegion::empty(),
        }
    }

    /// Keep the cells with `x_min <= i < x_max` and `y_min <= j < y_max`.
    pub fn clip(&self, x: (i64, i64), y: (i64, i64)) -> Result<CellRegion> {
        let mut first = None;
        let mut rows = Vec::new();
        let mut gap = false;
        for (j, lo, hi) in self.rows() {
            let (lo, hi) = (lo.max(x.0), hi.min(x.1));
            let keep = y.0 <= j && j < y.1 && lo < hi;
            if keep {
                if gap {
                    return Err(Error::NotRowConvex);
                }
                first.get_or_insert(j);
                rows.push(Span { lo, hi });
            } else if first.is_some() {
                gap = true;
            }
        }
        Ok(CellRegion {
            first_row: first.unwrap_or(0),
            rows,
            origin: self.origin,
        })
    }
}

fn staircase_rows(order: u32, orientation: Orientation) -> CellRegion {
    let n = order as i64;
    let (first, rows): (i64, Vec<(i64, i64)>) = match orientation {
        Orientation::DL => (0, (0..n).map(|j| (0, n - j)).collect()),
        Orientation::DR => (0, (0..n).map(|j| (-(n - j), 0)).collect()),
        Orientation::UL => (-n, (-n..0).map(|j| (0, n + j + 1)).collect()),
        Orientation::UR => (-n, (-n..0).map(|j| (-(n + j + 1), 0)).collect()),
    };
    CellRegion::from_rows(first, rows).expect("staircase rows are nonempty")
}

/// Canonically placed staircase; order 0 is the empty region.
pub fn staircase(order: u32, orientation: Orientation) -> CellRegion {
    staircase_rows(order, orientation)
}

fn aztec_rows(n: i64) -> impl Iterator<Item = (i64, i64)> {
    (-n..n).map(move |j| {
        let folded = if j >= 0 { j } else { -j - 1 };
        (-(n - folded), n - folded)
    })
}

fn biscuit_rows(n: i64) -> impl Iterator<Item = (i64, i64)> {
    (-(n - 1)..n).map(move |j| {
        let a = j.abs();
        (-(n - 1 - a), n - a)
    })
}

/// Construct a shape in canonical placement.
pub fn build(spec: &ShapeSpec) -> Result<CellRegion> {
    spec.validate()?;
    let n = spec.order() as i64;
    let region = match *spec {
        ShapeSpec::Aztec(_) => CellRegion::from_rows(-n, aztec_rows(n))?,
        ShapeSpec::Biscuit(_) => CellRegion::from_rows(-(n - 1), biscuit_rows(n))?,
        ShapeSpec::Staircase(order, o) => staircase_rows(order, o),
        ShapeSpec::AztecHalf(_, side) => {
            let full = CellRegion::from_rows(-n, aztec_rows(n))?;
            let (x, y) = match side {
                Side::Top => ((i64::MIN, i64::MAX), (0, i64::MAX)),
                Side::Bottom => ((i64::MIN, i64::MAX), (i64::MIN, 0)),
                Side::Left => ((i64::MIN, 0), (i64::MIN, i64::MAX)),
                Side::Right => ((0, i64::MAX), (i64::MIN, i64::MAX)),
            };
            full.clip(x, y)?
        }
        ShapeSpec::BiscuitHalf(_, part) => {
            let full = CellRegion::from_rows(-(n - 1), biscuit_rows(n))?;
            match part {
                Part::Larger => full.clip((i64::MIN, i64::MAX), (0, i64::MAX))?,
                Part::Smaller => full.clip((i64::MIN, i64::MAX), (i64::MIN, 0))?,
            }
        }
    };
    Ok(region.with_origin((0, 0)))
}

impl ShapeSpec {
    /// The vertical symmetry axis in canonical placement, if the shape has one.
    pub fn vertical_axis(&self) -> Option<Axis> {
        match self {
            ShapeSpec::Aztec(_) => Some(Axis::LatticeVertical(0)),
            ShapeSpec::AztecHalf(_, Side::Top | Side::Bottom) => Some(Axis::LatticeVertical(0)),
            ShapeSpec::Biscuit(_) | ShapeSpec::BiscuitHalf(..) => Some(Axis::HalfVertical(0)),
            _ => None,
        }
    }
}

/// Whether every cell of `r` lies in `region`.
pub fn contains_rect(region: &CellRegion, r: &LatticeRect) -> bool {
    (r.c..r.d).all(|j| matches!(region.row(j), Some((lo, hi)) if lo <= r.a && r.b <= hi))
}

pub fn bounding_box(region: &CellRegion) -> Result<LatticeRect> {
    if region.is_empty() {
        return Err(Error::EmptyRegion);
    }
    let lo = region.rows.iter().map(|s| s.lo).min().unwrap_or(0);
    let hi = region.rows.iter().map(|s| s.hi).max().unwrap_or(0);
    LatticeRect::new(
        lo,
        hi,
        region.first_row,
        region.first_row + region.rows.len() as i64,
    )
}

/// The two sides of a vertical split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSplit {
    pub left: CellRegion,
    pub right: CellRegion,
    /// The line the cells were separated along.
    pub axis: Axis,
}

/// Split an Aztec diamond or square biscuit vertically through its center
/// (Aztec) or quasi-center (biscuit), taken from the region's origin.
///
/// For a biscuit of order `n` the right part has `n` columns and `n^2` cells,
/// the left part `n - 1` columns and `(n - 1)^2` cells. The biscuit's own
/// symmetry axis `x = 1/2` crosses the middle column and cannot separate
/// cells, so the split line is the lattice line through the quasi-center.
/// Horizontal splits are obtained by transposing first.
pub fn split_half(region: &CellRegion, spec: &ShapeSpec) -> Result<HalfSplit> {
    match spec {
        ShapeSpec::Aztec(_) | ShapeSpec::Biscuit(_) => {}
        other => {
            return Err(Error::Unsupported(format!(
                "split_half needs an Aztec diamond or a square biscuit, got {other}"
            )))
        }
    }
    let x0 = region.origin().0;
    let all = (i64::MIN, i64::MAX);
    Ok(HalfSplit {
        left: region.clip((i64::MIN, x0), all)?,
        right: region.clip((x0, i64::MAX), all)?,
        axis: Axis::LatticeVertical(x0),
    })
}

/// One labeled piece of a four-staircase decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircasePart {
    pub orientation: Orientation,
    /// Order 0 marks an empty piece.
    pub order: u32,
    pub region: CellRegion,
}

/// Cut an Aztec diamond or a square biscuit along the two axis lines through
/// the origin into four staircases, one per orientation.
///
/// Orders are `(n, n, n, n)` for Aztec diamonds and, in the order DL, DR, UL,
/// UR, `(n, n-1, n-1, n-2)` for biscuits. Biscuits of order 1 are rejected.
pub fn split_staircases(spec: &ShapeSpec) -> Result<Vec<StaircasePart>> {
    let n = spec.order();
    let orders = match spec {
        ShapeSpec::Aztec(_) if n >= 1 => [n, n, n, n],
        ShapeSpec::Biscuit(_) if n >= 2 => [n, n - 1, n - 1, n - 2],
        ShapeSpec::Biscuit(_) => {
            return Err(Error::Unsupported(
                "a square biscuit needs order >= 2 for a four-staircase split".into(),
            ))
        }
        other => {
            return Err(Error::Unsupported(format!(
                "split_staircases needs an Aztec diamond or a square biscuit, got {other}"
            )))
        }
    };
    let region = build(spec)?;
    let lower = (i64::MIN, 0);
    let upper = (0, i64::MAX);
    let quadrants = [
        (Orientation::DL, upper, upper),
        (Orientation::DR, lower, upper),
        (Orientation::UL, upper, lower),
        (Orientation::UR, lower, lower),
    ];
    quadrants
        .into_iter()
        .zip(orders)
        .map(|((orientation, x, y), order)| {
            let piece = region.clip(x, y)?;
            debug_assert_eq!(piece, staircase(order, orientation));
            Ok(StaircasePart {
                orientation,
                order,
                region: piece,
            })
        })
        .collect()
}

/// The eight symmetries of the square lattice that fix the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dihedral {
    Identity,
    /// Counterclockwise quarter turn, `(x, y) -> (-y, x)`.
    Rot90,
    Rot180,
    /// Clockwise quarter turn, `(x, y) -> (y, -x)`.
    Rot270,
    /// `(x, y) -> (-x, y)`.
    MirrorX,
    /// `(x, y) -> (x, -y)`.
    MirrorY,
    /// `(x, y) -> (y, x)`.
    Transpose,
    /// `(x, y) -> (-y, -x)`.
    AntiTranspose,
}

impl Dihedral {
    pub const ALL: [Dihedral; 8] = [
        Self::Identity,
        Self::Rot90,
        Self::Rot180,
        Self::Rot270,
        Self::MirrorX,
        Self::MirrorY,
        Self::Transpose,
        Self::AntiTranspose,
    ];

    pub fn apply_point(self, (x, y): (i64, i64)) -> (i64, i64) {
        match self {
            Self::Identity => (x, y),
            Self::Rot90 => (-y, x),
            Self::Rot180 => (-x, -y),
            Self::Rot270 => (y, -x),
            Self::MirrorX => (-x, y),
            Self::MirrorY => (x, -y),
            Self::Transpose => (y, x),
            Self::AntiTranspose => (-y, -x),
        }
    }

    pub fn apply_cell(self, cell: Cell) -> Cell {
        let (x0, y0) = self.apply_point((cell.i, cell.j));
        let (x1, y1) = self.apply_point((cell.i + 1, cell.j + 1));
        Cell {
            i: x0.min(x1),
            j: y0.min(y1),
        }
    }
}

/// Image of a region under a lattice symmetry about the origin.
///
/// Fails with [`Error::NotRowConvex`] when the image has a row that is not a
/// single run, which cannot happen for the shapes this crate builds.
pub fn transform(region: &CellRegion, g: Dihedral) -> Result<CellRegion> {
    let image = CellRegion::from_cells(region.cells().map(|c| g.apply_cell(c)))?;
    Ok(image.with_origin(g.apply_point(region.origin())))
}
