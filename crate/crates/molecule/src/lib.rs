//! Counting the period-n hyperbolic components on the main molecule of the
//! Mandelbrot set, three independent ways, and confirming the counts by
//! locating the actual superattracting centers in the parameter plane of
//! `z -> z^2 + c`.
//!
//! * [`count`] — exact arithmetic: the ordered-factorization sum, the divisor
//!   recursion, prime-power and squarefree closed forms, ordered Bell
//!   numbers, and the total component count for cross-checking.
//! * [`address`] — satellite addresses: chains of rotation numbers that name
//!   each molecule component, in bijection with the counted components.
//! * [`numerics`] — multiplier path-following to the center named by an
//!   address, a full Aberth-Ehrlich sweep of all period-n centers, and the
//!   verification report tying them to the combinatorial count.
//! * [`render`] — deterministic escape-time plots with centers marked.
//! * [`table`] — machine-readable count tables.
//!
//! With the default `parallel` feature the sweep, batch center location, and
//! rendering distribute over rayon; every parallel path has a sequential
//! twin (`*_seq`) that produces bit-identical output.

pub mod address;
pub mod count;
mod exec;
pub mod numerics;
pub mod render;
pub mod table;

pub use address::{
    address_count, address_period, enumerate_addresses, enumerate_addresses_with_budget,
    InvalidRotation, RotationNumber, SatelliteAddress,
};
pub use count::{
    asymptotic_ratio, divisors, euler_phi, is_prime, mobius, molecule_count_direct,
    molecule_count_direct_with_budget, molecule_count_prime_power, molecule_count_recursive,
    molecule_count_squarefree, ordered_bell, ordered_factorization_count, ordered_factorizations,
    ordered_factorizations_with_budget, total_component_count, BigCount, CountError,
    OrderedFactorization, PrimeFactorization, DEFAULT_ENUMERATION_BUDGET,
};
pub use numerics::{
    all_centers_sweep, all_centers_sweep_seq, cardioid_boundary_point, critical_poly,
    cycle_point_and_multiplier, follow_to_root, locate_addresses, locate_addresses_seq,
    locate_center, primitive_period, verify_molecule_count, Center, NumericsError,
    PathFollowConfig, SweepConfig, VerifyOptions, VerifyReport,
};
pub use render::{escape_map, escape_map_seq, render_ppm, render_ppm_seq, PlotSpec, Window};
pub use table::{build_table, to_csv, to_json, TableRow};
