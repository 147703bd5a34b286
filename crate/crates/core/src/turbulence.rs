//! Local orbits and per-point turbulence analysis.

use crate::actions::GroupAction;
use crate::sets::IdxSet;

/// The smallest subset of `U` containing `x` and closed under translation
/// by elements of `V` that stays inside `U`. Monotone in both `U` and `V`.
///
/// Panics when `x` is not in `U`.
pub fn local_orbit(action: &GroupAction, x: usize, u: IdxSet, v: IdxSet) -> IdxSet {
    assert!(u.contains(x), "base point {x} must lie in U={u}");
    let mut orbit = IdxSet::singleton(x);
    let mut frontier = vec![x];
    while let Some(z) = frontier.pop() {
        for g in v.iter() {
            let w = action.apply(g, z);
            if u.contains(w) && !orbit.contains(w) {
                orbit.insert(w);
                frontier.push(w);
            }
        }
    }
    orbit
}

/// Per-point turbulence data for one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointTurbulence {
    pub point: usize,
    pub dense_orbit: bool,
    pub turbulent: bool,
    pub meager_orbit: bool,
    /// Pairs `(U, V)` of a basis neighborhood of the point and a chain
    /// element for which the closure of the local orbit is not a
    /// neighborhood of the point.
    pub witness_failures: Vec<(IdxSet, IdxSet)>,
}

/// Turbulence analysis of a whole action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TurbulenceReport {
    pub points: Vec<PointTurbulence>,
    pub preturbulent: bool,
    pub turbulent_action: bool,
}

/// A point is turbulent when its orbit is dense and, for every basis
/// neighborhood `U` of the point and every chain element `V`, the closure
/// of the local orbit contains the point's minimal open set (i.e. is a
/// neighborhood of the point).
pub fn turbulence_report(action: &GroupAction) -> TurbulenceReport {
    let space = action.space();
    let chain = action.group().filter_chain();
    let mut points = Vec::with_capacity(space.n_points());
    for x in 0..space.n_points() {
        let orbit = action.orbit_of(x);
        let report = space.category_report(orbit);
        let core = space.core_open(x);
        let mut witness_failures = Vec::new();
        for u in space.basis().iter().filter(|u| u.contains(x)) {
            for v in chain {
                let lo = local_orbit(action, x, *u, *v);
                if !core.is_subset(space.closure(lo)) {
                    witness_failures.push((*u, *v));
                }
            }
        }
        points.push(PointTurbulence {
            point: x,
            dense_orbit: report.is_dense,
            turbulent: report.is_dense && witness_failures.is_empty(),
            meager_orbit: report.is_meager,
            witness_failures,
        });
    }
    let preturbulent = !points.is_empty() && points.iter().all(|p| p.turbulent);
    let turbulent_action = preturbulent && points.iter().all(|p| p.meager_orbit);
    TurbulenceReport {
        points,
        preturbulent,
        turbulent_action,
    }
}
