//! Exact enumeration of the lattice rectangles contained in Aztec diamonds,
//! square biscuits, staircases and their halves.
//!
//! Every shape is a [`CellRegion`]: a stack of rows, each row one contiguous
//! run of unit cells. Rectangle counts come from three independent routes:
//!
//! * [`counting::count_naive`], a brute-force enumeration over the bounding box
//!   with a prefix-sum inclusion test,
//! * [`counting::count_fast`], a histogram sweep with a monotonic stack that is
//!   linear in the number of cells,
//! * [`formulas`], closed forms evaluated in both binomial and polynomial form.
//!
//! The [`bijections`] module makes each combinatorial argument executable as a
//! pair of mutually inverse maps with an exhaustive checker, and [`oeis`]
//! parses b-files and compares reference terms against the closed forms.
//!
//! ```
//! use latrect_core::{build, counting, formulas, ShapeSpec};
//!
//! let diamond = build(&ShapeSpec::Aztec(3)).unwrap();
//! assert_eq!(diamond.cell_count(), 24);
//! let fast = counting::count_fast(&diamond).unwrap();
//! assert_eq!(fast, counting::count_naive(&diamond).unwrap());
//! assert_eq!(fast, formulas::a(3).unwrap());
//! ```
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bijections;
pub mod count;
pub mod counting;
pub mod error;
pub mod formulas;
pub mod geometry;
pub mod oeis;
pub mod shape;

pub use count::Count;
pub use error::{Error, ParseError, Result};
pub use geometry::{
    bounding_box, build, contains_rect, split_half, split_staircases, transform, Axis, Cell,
    CellRegion, Dihedral, HalfSplit, LatticeRect, StaircasePart,
};
pub use shape::{parse_shape_spec, Family, Orientation, Part, ShapeSpec, Side};
