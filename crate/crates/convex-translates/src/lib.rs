//! Planar convex-geometry kernel for intersections of translates of a smooth,
//! strictly convex body.
//!
//! A body is represented by a truncated Fourier support function with
//! certified positive curvature radius, which makes the Gauss map a bijection
//! between boundary points and outward normal directions. On top of that the
//! crate provides:
//!
//! - chord functions perpendicular to a direction, their unique maximum and
//!   the two-chords-of-given-length solver ([`chords`]),
//! - intersections of `n` translates with their singular vertices, owned
//!   boundary edges, Gauss-measure bookkeeping and redundancy diagnostics
//!   ([`intersection`]),
//! - a brute-force polygonal oracle used to cross-validate every analytic
//!   result ([`oracle`]),
//! - a gallery of arc/segment bodies reproducing the sharpness
//!   counterexamples where smoothness or strict convexity must fail
//!   ([`gallery`]),
//! - seeded random instance generation and a verification campaign
//!   ([`fuzz`]).
//!
//! The `examples/` directory contains one runnable example per capability;
//! the `convex-translates` binary exposes the same machinery as `verify`,
//! `fuzz`, `gallery`, `chords` and `plot` subcommands.

pub mod body;
pub mod chords;
pub mod fuzz;
pub mod gallery;
pub mod intersection;
pub mod io;
pub mod oracle;
pub mod svg;

pub use body::{Angle, Containment, SupportBody, SupportFunction, Vec2};
pub use chords::{Chord, ChordProfile};
pub use intersection::{Arrangement, IntersectionShape, TheoremReport};
