//! Executable checks of the approximation guarantees: disk containment, the
//! packing lemmas behind the bounds, and oracle-backed ratio sweeps.

mod disk;
mod lemmas;
mod scaling;
mod sweep;

pub use disk::{containment, Containment, Disk};
pub use lemmas::{
    check_corollary_limits, check_counting_lemma, check_lemmas, check_line_structure,
    check_opt_disk_lemma, counting_partials, lemma_radius, solution_points, LemmaOutcome,
};
pub use scaling::log_log_slope;
pub use sweep::{
    bound_for, evaluate_lemmas, evaluate_ratio, ratio_report, run_lemma_sweep, run_ratio_sweep,
    run_ratio_sweep_with, InstanceSummary, LemmaReport, RatioReport, SweepSpec, RATIO_TOL,
};
