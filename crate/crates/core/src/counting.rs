//! Rectangle counting: the brute-force oracle, the linear-time sweep and the
//! classification of rectangles against a vertical axis.

use alloc::vec;
use alloc::vec::Vec;

use crate::count::Count;
use crate::error::{Error, Result};
use crate::formulas;
use crate::geometry::{bounding_box, build, Axis, CellRegion, LatticeRect};
use crate::shape::ShapeSpec;

/// Position of a rectangle relative to a vertical axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CrossingClass {
    /// Crossing, with the part left of the axis wider.
    L,
    /// Crossing, with the part right of the axis wider.
    R,
    /// Crossing, bisected by the axis.
    C,
    /// The axis misses the open interior.
    NonCrossing,
}

impl CrossingClass {
    pub const ALL: [CrossingClass; 4] = [Self::L, Self::R, Self::C, Self::NonCrossing];
}

/// Rectangle counts split by [`CrossingClass`] for one axis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CountBreakdown {
    pub total: Count,
    pub left: Count,
    pub right: Count,
    pub centered: Count,
    pub non_crossing: Count,
}

impl CountBreakdown {
    pub fn get(&self, class: CrossingClass) -> Count {
        match class {
            CrossingClass::L => self.left,
            CrossingClass::R => self.right,
            CrossingClass::C => self.centered,
            CrossingClass::NonCrossing => self.non_crossing,
        }
    }

    /// Rectangles whose interior meets the axis.
    pub fn crossing(&self) -> Count {
        Count::new(self.left.get() + self.right.get() + self.centered.get())
    }
}

/// Which counting route to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Naive,
    Fast,
    Formula,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Naive, Method::Fast, Method::Formula];

    pub fn name(self) -> &'static str {
        match self {
            Method::Naive => "naive",
            Method::Fast => "fast",
            Method::Formula => "formula",
        }
    }
}

/// 2D prefix sums of cell occupancy over a bounding box: O(1) "is this
/// rectangle fully covered" queries.
struct Occupancy {
    x0: i64,
    y0: i64,
    width: usize,
    height: usize,
    prefix: Vec<u64>,
}

impl Occupancy {
    fn new(region: &CellRegion, bb: &LatticeRect) -> Self {
        let width = bb.width() as usize;
        let height = bb.height() as usize;
        let stride = width + 1;
        let mut prefix = vec![0u64; stride * (height + 1)];
        for y in 0..height {
            let (lo, hi) = region
                .row(bb.c() + y as i64)
                .expect("rows are contiguous inside the bounding box");
            let mut run = 0;
            for x in 0..width {
                let i = bb.a() + x as i64;
                run += u64::from(lo <= i && i < hi);
                prefix[(y + 1) * stride + x + 1] = prefix[y * stride + x + 1] + run;
            }
        }
        Occupancy {
            x0: bb.a(),
            y0: bb.c(),
            width,
            height,
            prefix,
        }
    }

    /// Cells of `[x0+a, x0+b) x [y0+c, y0+d)` in box-relative coordinates.
    fn filled(&self, a: usize, b: usize, c: usize, d: usize) -> u64 {
        let s = self.width + 1;
        self.prefix[d * s + b] + self.prefix[c * s + a]
            - self.prefix[c * s + b]
            - self.prefix[d * s + a]
    }

    fn full(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        self.filled(a, b, c, d) == ((b - a) * (d - c)) as u64
    }
}

/// Visit every lattice rectangle contained in `region` by testing every
/// candidate in the bounding box. Stops at the first error from `visit`.
pub fn for_each_rect<F>(region: &CellRegion, mut visit: F) -> Result<()>
where
    F: FnMut(LatticeRect) -> Result<()>,
{
    let Ok(bb) = bounding_box(region) else {
        return Ok(());
    };
    let occ = Occupancy::new(region, &bb);
    for c in 0..occ.height {
        for d in c + 1..=occ.height {
            for a in 0..occ.width {
                for b in a + 1..=occ.width {
                    if !occ.full(a, b, c, d) {
                        // widening cannot help once a cell is missing
                        break;
                    }
                    visit(LatticeRect::new(
                        occ.x0 + a as i64,
                        occ.x0 + b as i64,
                        occ.y0 + c as i64,
                        occ.y0 + d as i64,
                    )?)?;
                }
            }
        }
    }
    Ok(())
}

/// All rectangles contained in `region`, in enumeration order.
pub fn rects_in(region: &CellRegion) -> Vec<LatticeRect> {
    let mut out = Vec::new();
    for_each_rect(region, |r| {
        out.push(r);
        Ok(())
    })
    .expect("collecting cannot fail");
    out
}

/// Brute-force count. O(W^2 H^2) over the bounding box.
pub fn count_naive(region: &CellRegion) -> Result<Count> {
    let mut total = Count::ZERO;
    for_each_rect(region, |_| total.increment())?;
    Ok(total)
}

/// Count by sweeping rows from the top down.
///
/// `heights[x]` is the number of consecutive filled cells in column `x` ending
/// at the current row. For each cell, `ending[x]` is the number of rectangles
/// whose bottom-right cell it is: with `p` the nearest column to the left with
/// a strictly smaller height, `ending[x] = heights[x] * (x - p) + ending[p]`.
/// A monotonic stack finds `p`. Only the current row's run is touched, so the
/// sweep is linear in the number of cells.
pub fn count_fast(region: &CellRegion) -> Result<Count> {
    let Ok(bb) = bounding_box(region) else {
        return Ok(Count::ZERO);
    };
    let width = bb.width() as usize;
    let mut heights = vec![0u64; width];
    let mut ending = vec![0u64; width];
    let mut stack: Vec<usize> = Vec::with_capacity(width);
    let mut previous: Option<(usize, usize)> = None;
    let mut total = Count::ZERO;

    for (_, lo, hi) in region.rows().rev() {
        let lo = (lo - bb.a()) as usize;
        let hi = (hi - bb.a()) as usize;
        if let Some((plo, phi)) = previous {
            for x in (plo..phi).filter(|&x| x < lo || x >= hi) {
                heights[x] = 0;
            }
        }
        previous = Some((lo, hi));

        stack.clear();
        let mut row_total: u64 = 0;
        for x in lo..hi {
            heights[x] += 1;
            let h = heights[x];
            while stack.last().is_some_and(|&t| heights[t] >= h) {
                stack.pop();
            }
            let (start, carried) = match stack.last() {
                Some(&p) => (p + 1, ending[p]),
                None => (lo, 0),
            };
            ending[x] = h
                .checked_mul((x - start + 1) as u64)
                .and_then(|v| v.checked_add(carried))
                .ok_or(Error::Overflow)?;
            row_total = row_total.checked_add(ending[x]).ok_or(Error::Overflow)?;
            stack.push(x);
        }
        total = total.checked_add(Count::from(row_total))?;
    }
    Ok(total)
}

/// Classify `r` against a vertical axis by comparing the widths on either side
/// (in half-units, so half-integer axes need no special case).
pub fn classify(r: &LatticeRect, axis: Axis) -> CrossingClass {
    let x2 = axis.doubled_x();
    let left = x2 - 2 * r.a();
    let right = 2 * r.b() - x2;
    if left <= 0 || right <= 0 {
        CrossingClass::NonCrossing
    } else if left > right {
        CrossingClass::L
    } else if left < right {
        CrossingClass::R
    } else {
        CrossingClass::C
    }
}

/// Exact per-class counts by filtered enumeration.
pub fn count_breakdown(region: &CellRegion, axis: Axis) -> Result<CountBreakdown> {
    let mut out = CountBreakdown::default();
    for_each_rect(region, |r| {
        out.total.increment()?;
        match classify(&r, axis) {
            CrossingClass::L => out.left.increment(),
            CrossingClass::R => out.right.increment(),
            CrossingClass::C => out.centered.increment(),
            CrossingClass::NonCrossing => out.non_crossing.increment(),
        }
    })?;
    Ok(out)
}

/// Count the rectangles of a family member by the chosen route.
pub fn count_family(spec: &ShapeSpec, method: Method) -> Result<Count> {
    match method {
        Method::Naive => count_naive(&build(spec)?),
        Method::Fast => count_fast(&build(spec)?),
        Method::Formula => formulas::for_shape(spec),
    }
}
