//! Worked constructions on the determinantal ring `F_p[X]/I_2(X)` and on
//! small hypersurfaces, with scripted checks that run them end to end.

pub mod artinian;
pub mod determinantal;
pub mod families;
pub mod scenario;
pub mod sweeps;

pub use artinian::generate_artinian_frobenius_trivial;
pub use determinantal::build_determinantal;
pub use scenario::{run_scenario, scenario_ids, Outcome, Scenario, ScenarioReport, Status};
