//! The bundled instance catalog: a curated list of topologies on up to 4
//! points crossed with the groups of order up to 6 under several filter
//! chains, with every action (homomorphism into the homeomorphism group)
//! enumerated.
//!
//! Catalog chains are built from subgroups, so left translates of chain
//! elements containing the identity coincide with the chain elements
//! themselves; this keeps the rectangle basis of an action groupoid in
//! exact correspondence with the pairs available in the action games.

use crate::actions::GroupAction;
use crate::groups::TopGroup;
use crate::sets::IdxSet;
use crate::spaces::FiniteSpace;

/// Hard cap on the catalog size.
pub const CATALOG_CAP: usize = 5000;

/// One named instance.
#[derive(Clone, Debug)]
pub struct CatalogInstance {
    pub name: String,
    pub action: GroupAction,
}

fn cores(sets: &[&[usize]]) -> FiniteSpace {
    let masks: Vec<IdxSet> = sets
        .iter()
        .map(|s| IdxSet::from_indices(s.iter().copied()))
        .collect();
    FiniteSpace::from_cores(&masks)
}

/// The curated spaces, keyed by name. Each space is presented by the
/// family of minimal open sets, one per point.
pub fn curated_spaces() -> Vec<(&'static str, FiniteSpace)> {
    vec![
        ("discrete1", FiniteSpace::discrete(1)),
        ("discrete2", FiniteSpace::discrete(2)),
        ("sierpinski", FiniteSpace::sierpinski()),
        ("indiscrete2", FiniteSpace::indiscrete(2)),
        ("discrete3", FiniteSpace::discrete(3)),
        ("indiscrete3", FiniteSpace::indiscrete(3)),
        ("chain3", cores(&[&[0, 1, 2], &[1, 2], &[2]])),
        ("sierpinski-plus-point", cores(&[&[0, 1], &[1], &[2]])),
        ("vee3", cores(&[&[0, 2], &[1, 2], &[2]])),
        ("wedge3", cores(&[&[0, 1, 2], &[1], &[2]])),
        ("fused-pair-plus-point", cores(&[&[0, 1], &[0, 1], &[2]])),
        ("discrete4", FiniteSpace::discrete(4)),
        ("indiscrete4", FiniteSpace::indiscrete(4)),
        ("chain4", cores(&[&[0, 1, 2, 3], &[1, 2, 3], &[2, 3], &[3]])),
        ("sierpinski-square", cores(&[&[0, 1, 2, 3], &[1, 3], &[2, 3], &[3]])),
        ("two-sierpinski", cores(&[&[0, 1], &[1], &[2, 3], &[3]])),
        ("fused-pairs", cores(&[&[0, 1], &[0, 1], &[2, 3], &[2, 3]])),
        ("wedge4", cores(&[&[0, 1, 2, 3], &[1], &[2], &[3]])),
    ]
}

/// The catalog groups under their chain variants. Suffixes: `-c` is the
/// coarse chain `[G]`, `-h` the Hausdorff chain `[G, {1}]`, `-s` a proper
/// subgroup step `[G, H, {1}]`.
pub fn catalog_groups() -> Vec<(String, TopGroup)> {
    let mut out: Vec<(String, TopGroup)> = Vec::new();
    out.push(("trivial".to_string(), TopGroup::trivial()));
    for (name, group) in [
        ("z2", TopGroup::cyclic(2)),
        ("z3", TopGroup::cyclic(3)),
        ("z2xz2", TopGroup::klein_four()),
        ("s3", TopGroup::symmetric3()),
    ] {
        let full = group.elements();
        out.push((
            format!("{name}-c"),
            group.with_chain(vec![full]),
        ));
        out.push((format!("{name}-h"), group.clone()));
        let step = match name {
            "z2xz2" => Some(IdxSet::from_indices([0, 1])),
            "s3" => Some(IdxSet::from_indices([0, 3, 4])), // the even permutations
            _ => None,
        };
        if let Some(h) = step {
            out.push((
                format!("{name}-s"),
                group.with_chain(vec![full, h, IdxSet::singleton(0)]),
            ));
        }
    }
    out
}

/// The homeomorphisms of a finite space: bijections carrying the minimal
/// open set of each point onto the minimal open set of its image. One-line
/// forms in lexicographic order.
pub fn homeomorphisms(space: &FiniteSpace) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    let n = space.n_points();
    (0..n)
        .permutations(n)
        .filter(|perm| {
            (0..n).all(|x| {
                let image: IdxSet = space.core_open(x).iter().map(|z| perm[z]).collect();
                image == space.core_open(perm[x])
            })
        })
        .collect()
}

/// A small generating set, chosen greedily by least element.
fn generating_set(group: &TopGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut closure = IdxSet::singleton(group.identity());
    while closure.len() < group.order() {
        let g = (0..group.order()).find(|g| !closure.contains(*g)).unwrap();
        gens.push(g);
        // Close under multiplication by the chosen generators.
        loop {
            let mut next = closure;
            for a in closure.iter() {
                for &s in &gens {
                    next.insert(group.mul(a, s));
                    next.insert(group.mul(s, a));
                }
            }
            if next == closure {
                break;
            }
            closure = next;
        }
    }
    gens
}

fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&i| outer[i]).collect()
}

/// Propagates generator images through the group; `None` when the
/// assignment is inconsistent with the multiplication table.
fn extend_generator_images(
    group: &TopGroup,
    gens: &[usize],
    gen_images: &[&Vec<usize>],
    identity_perm: &[usize],
) -> Option<Vec<Vec<usize>>> {
    let order = group.order();
    let mut images: Vec<Option<Vec<usize>>> = vec![None; order];
    images[group.identity()] = Some(identity_perm.to_vec());
    let mut changed = true;
    while changed {
        changed = false;
        for g in 0..order {
            let Some(pg) = images[g].clone() else { continue };
            for (k, &s) in gens.iter().enumerate() {
                let target = group.mul(g, s);
                let composed = compose(&pg, gen_images[k]);
                match &images[target] {
                    None => {
                        images[target] = Some(composed);
                        changed = true;
                    }
                    Some(existing) if *existing != composed => return None,
                    _ => {}
                }
            }
        }
    }
    let table: Vec<Vec<usize>> = images.into_iter().collect::<Option<_>>()?;
    let hom = (0..order)
        .all(|g| (0..order).all(|h| compose(&table[g], &table[h]) == table[group.mul(g, h)]));
    hom.then_some(table)
}

/// Every action of `group` on `space` by homeomorphisms, enumerated as
/// homomorphisms into the homeomorphism group via generator images.
pub fn enumerate_actions(group: &TopGroup, space: &FiniteSpace) -> Vec<GroupAction> {
    use itertools::Itertools;
    let homeos = homeomorphisms(space);
    let gens = generating_set(group);
    let n = space.n_points();
    let identity_perm: Vec<usize> = (0..n).collect();
    if gens.is_empty() {
        return vec![GroupAction::trivial(group.clone(), space.clone())];
    }

    let mut actions = Vec::new();
    for assignment in std::iter::repeat_n(0..homeos.len(), gens.len())
        .multi_cartesian_product()
    {
        let gen_images: Vec<&Vec<usize>> = assignment.iter().map(|&i| &homeos[i]).collect();
        let Some(table) = extend_generator_images(group, &gens, &gen_images, &identity_perm)
        else {
            continue;
        };
        let action = GroupAction::from_permutations(group.clone(), space.clone(), table);
        if !actions.contains(&action) {
            actions.push(action);
        }
    }
    actions
}

/// The full catalog, capped at [`CATALOG_CAP`] instances.
pub fn full_catalog() -> Vec<CatalogInstance> {
    let mut out = Vec::new();
    for (sname, space) in curated_spaces() {
        for (gname, group) in catalog_groups() {
            for (k, action) in enumerate_actions(&group, &space).into_iter().enumerate() {
                if out.len() >= CATALOG_CAP {
                    return out;
                }
                out.push(CatalogInstance {
                    name: format!("{sname}--{gname}--a{k:02}"),
                    action,
                });
            }
        }
    }
    out
}

/// True when every point is open.
pub fn is_discrete(space: &FiniteSpace) -> bool {
    (0..space.n_points()).all(|x| space.core_open(x) == IdxSet::singleton(x))
}

/// The named fixtures emitted by the generator: each curated space crossed
/// with each base group, acting through its most faithful enumerated
/// action under the Hausdorff chain.
pub fn fixture_names() -> Vec<String> {
    let mut names = Vec::new();
    for (sname, _) in curated_spaces() {
        for gname in ["trivial", "z2", "z3", "z2xz2", "s3"] {
            names.push(format!("{sname}-{gname}"));
        }
    }
    names
}

/// Looks up a fixture by name.
pub fn fixture(name: &str) -> Option<CatalogInstance> {
    for (sname, space) in curated_spaces() {
        for (gname, group) in [
            ("trivial", TopGroup::trivial()),
            ("z2", TopGroup::cyclic(2)),
            ("z3", TopGroup::cyclic(3)),
            ("z2xz2", TopGroup::klein_four()),
            ("s3", TopGroup::symmetric3()),
        ] {
            if format!("{sname}-{gname}") != name {
                continue;
            }
            let actions = enumerate_actions(&group, &space);
            let moved = |a: &GroupAction| -> usize {
                (0..a.group().order())
                    .map(|g| (0..a.space().n_points()).filter(|&x| a.apply(g, x) != x).count())
                    .sum()
            };
            let best = actions
                .into_iter()
                .enumerate()
                .max_by(|(i, a), (j, b)| moved(a).cmp(&moved(b)).then(j.cmp(i)))
                .map(|(_, a)| a)?;
            return Some(CatalogInstance {
                name: name.to_string(),
                action: best,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curated_spaces_validate() {
        for (name, space) in curated_spaces() {
            assert!(space.violations().is_empty(), "space {name}");
        }
    }

    #[test]
    fn catalog_groups_validate() {
        for (name, group) in catalog_groups() {
            assert!(group.violations().is_empty(), "group {name}");
            let last = group.chain_last();
            assert!(last.contains(group.identity()), "group {name}");
        }
    }

    #[test]
    fn sierpinski_is_rigid() {
        let (_, s) = curated_spaces()
            .into_iter()
            .find(|(n, _)| *n == "sierpinski")
            .unwrap();
        assert_eq!(homeomorphisms(&s).len(), 1);
    }

    #[test]
    fn discrete3_has_full_symmetry() {
        assert_eq!(homeomorphisms(&FiniteSpace::discrete(3)).len(), 6);
    }

    #[test]
    fn every_catalog_instance_validates() {
        let catalog = full_catalog();
        assert!(!catalog.is_empty());
        assert!(catalog.len() <= CATALOG_CAP);
        for inst in &catalog {
            let report = inst.action.validate();
            assert!(report.is_valid(), "{}: {report}", inst.name);
        }
    }

    #[test]
    fn z3_on_discrete3_includes_the_rotation() {
        let actions = enumerate_actions(&TopGroup::cyclic(3), &FiniteSpace::discrete(3));
        assert_eq!(actions.len(), 3); // trivial + two rotation directions
        assert!(actions
            .iter()
            .any(|a| a.apply(1, 0) == 1 && a.apply(1, 1) == 2 && a.apply(1, 2) == 0));
    }

    #[test]
    fn fixtures_resolve() {
        for name in fixture_names() {
            let inst = fixture(&name).expect("fixture exists");
            assert!(inst.action.validate().is_valid(), "{name}");
        }
        // The swap is the canonical z2 fixture on two discrete points.
        let swap = fixture("discrete2-z2").unwrap();
        assert_eq!(swap.action.apply(1, 0), 1);
        assert!(fixture("nonexistent").is_none());
    }
}
