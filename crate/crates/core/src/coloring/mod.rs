//! Exact chromatic machinery and the bound checkers built on it.

mod bounds;
mod chromatic;
mod fractional;
mod theorem_d;

pub use bounds::{
    caprara_rizzi_check, caprara_rizzi_floor, ceil_div, chromatic_index, molloy_reed_check, reed_bound,
    reed_bound_report, seven_sixths_bound, verify_line_graph_reed, BoundFlags, BoundReport, CapraraRizziReport,
    LineGraphReedReport, MolloyReedReport,
};
pub use chromatic::{chromatic_number, dsatur, k_coloring, ColoringCertificate};
pub use fractional::{
    fractional_chromatic, fractional_chromatic_capped, fractional_chromatic_certified, FractionalCertificate,
    RationalValue, DEFAULT_FRACTIONAL_CAP,
};
pub use theorem_d::{theorem_d_color, BaseColorer, ExactColorer, TheoremDColoring};
