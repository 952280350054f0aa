//! Complete subgroup enumeration with structural annotations.
//!
//! Enumeration is bottom-up join-closure: the cyclic subgroups seed the
//! process and joins (closure of a union) iterate to a fixpoint. Joining each
//! known subgroup with each cyclic atom reaches the same fixpoint as joining
//! arbitrary pairs, since every subgroup is generated by finitely many cyclic
//! ones. Two shortcuts keep the larger instances fast: a join whose product
//! formula lower bound `|H||C| / |H n C|` exceeds `|G| / 2` must be the whole
//! group, and a closure that grows past `|G| / 2` elements is likewise the
//! whole group and is abandoned early.

use crate::bitset::ElemSet;
use crate::error::Error;
use crate::group::{factorize, FiniteGroup};
use crate::Limits;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

#[derive(Debug, Clone)]
pub struct Subgroup {
    /// Index within the lattice, stable under the canonical sort by
    /// `(order, member list)`.
    pub id: usize,
    pub members: ElemSet,
    pub order: usize,
    pub is_normal: bool,
    pub is_maximal: bool,
}

#[derive(Debug)]
pub struct SubgroupLattice {
    group: FiniteGroup,
    subgroups: Vec<Subgroup>,
    counts_by_order: BTreeMap<usize, usize>,
    index: HashMap<ElemSet, usize>,
}

struct Entry {
    members: ElemSet,
    order: usize,
    gens: Vec<usize>,
}

/// Enumerate every subgroup of `group`. Fails with
/// [`Error::SubgroupBound`] when the count exceeds the configured guard,
/// which signals the instance is beyond desk scale.
pub fn enumerate_subgroups(
    group: FiniteGroup,
    limits: &Limits,
) -> Result<SubgroupLattice, Error> {
    let n = group.order();
    if n > limits.max_group_order {
        return Err(Error::OrderBound {
            order: n,
            bound: limits.max_group_order,
        });
    }
    let mut entries: Vec<Entry> = Vec::new();
    let mut index: HashMap<ElemSet, usize> = HashMap::new();
    let push = |entries: &mut Vec<Entry>,
                    index: &mut HashMap<ElemSet, usize>,
                    members: ElemSet,
                    gens: Vec<usize>|
     -> Result<Option<usize>, Error> {
        if index.contains_key(&members) {
            return Ok(None);
        }
        if entries.len() + 1 > limits.max_subgroups {
            return Err(Error::SubgroupBound {
                bound: limits.max_subgroups,
            });
        }
        let id = entries.len();
        index.insert(members.clone(), id);
        entries.push(Entry {
            order: members.len(),
            members,
            gens,
        });
        Ok(Some(id))
    };

    let mut trivial = ElemSet::new(n);
    trivial.insert(0);
    push(&mut entries, &mut index, trivial, vec![])?;
    push(
        &mut entries,
        &mut index,
        ElemSet::full(n),
        group.generating_set(),
    )?;

    // cyclic atoms
    let mut atoms: Vec<(ElemSet, usize)> = Vec::new();
    for x in 1..n {
        let members = cyclic_subgroup(&group, x);
        let order = members.len();
        if let Some(_id) = push(&mut entries, &mut index, members.clone(), vec![x])? {
            if order < n {
                atoms.push((members, x));
            }
        }
    }

    // join fixpoint; index 0 is trivial, 1 the whole group
    let half = n / 2;
    let mut head = 2;
    while head < entries.len() {
        let (h_members, h_order, h_gens) = {
            let e = &entries[head];
            (e.members.clone(), e.order, e.gens.clone())
        };
        head += 1;
        if h_order == n {
            continue;
        }
        for (c_members, c_gen) in &atoms {
            if c_members.is_subset_of(&h_members) {
                continue;
            }
            let inter = h_members.intersection_len(c_members);
            if h_order * c_members.len() / inter > half {
                continue; // the join can only be the whole group
            }
            let mut gens = h_gens.clone();
            gens.push(*c_gen);
            if let Some(join) = group.closure_with_limit(&gens, half) {
                push(&mut entries, &mut index, join, gens)?;
            }
        }
    }

    // canonical order: by (order, ascending member list)
    let mut order_keys: Vec<usize> = (0..entries.len()).collect();
    order_keys.sort_by(|&a, &b| {
        entries[a]
            .order
            .cmp(&entries[b].order)
            .then_with(|| entries[a].members.cmp_members(&entries[b].members))
    });

    let group_gens = group.generating_set();
    let mut subgroups: Vec<Subgroup> = Vec::with_capacity(entries.len());
    for (id, &k) in order_keys.iter().enumerate() {
        let members = entries[k].members.clone();
        let is_normal = group_gens.iter().all(|&g| {
            members
                .iter()
                .all(|h| members.contains(group.conjugate(g, h)))
        });
        subgroups.push(Subgroup {
            id,
            order: entries[k].order,
            members,
            is_normal,
            is_maximal: false,
        });
    }

    // maximality: no proper intermediate above
    for i in 0..subgroups.len() {
        if subgroups[i].order == n {
            continue;
        }
        let mut maximal = true;
        for j in (i + 1)..subgroups.len() {
            if subgroups[j].order == n || subgroups[j].order <= subgroups[i].order {
                continue;
            }
            if subgroups[i].members.is_subset_of(&subgroups[j].members) {
                maximal = false;
                break;
            }
        }
        subgroups[i].is_maximal = maximal;
    }

    let mut counts_by_order = BTreeMap::new();
    for s in &subgroups {
        *counts_by_order.entry(s.order).or_insert(0) += 1;
    }
    let index = subgroups
        .iter()
        .map(|s| (s.members.clone(), s.id))
        .collect();
    Ok(SubgroupLattice {
        group,
        subgroups,
        counts_by_order,
        index,
    })
}

fn cyclic_subgroup(group: &FiniteGroup, x: usize) -> ElemSet {
    let mut set = ElemSet::new(group.order());
    set.insert(0);
    let mut acc = x;
    while acc != 0 {
        set.insert(acc);
        acc = group.mul(acc, x);
    }
    set
}

impl SubgroupLattice {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a lattice always contains at least the trivial subgroup
    }

    pub fn counts_by_order(&self) -> &BTreeMap<usize, usize> {
        &self.counts_by_order
    }

    pub fn by_members(&self, members: &ElemSet) -> Option<&Subgroup> {
        self.index.get(members).map(|&id| &self.subgroups[id])
    }

    /// The proper nontrivial subgroups, in lattice order. These are the
    /// vertices of the intersection graph.
    pub fn proper_nontrivial(&self) -> impl Iterator<Item = &Subgroup> {
        let n = self.group.order();
        self.subgroups
            .iter()
            .filter(move |s| s.order > 1 && s.order < n)
    }

    pub fn maximal_subgroups(&self) -> impl Iterator<Item = &Subgroup> {
        self.subgroups.iter().filter(|s| s.is_maximal)
    }

    /// Intersection of all maximal subgroups (the whole group when there are
    /// none, which only happens for the trivial group).
    pub fn frattini(&self) -> &Subgroup {
        let mut acc = ElemSet::full(self.group.order());
        for m in self.maximal_subgroups() {
            acc.intersect_with(&m.members);
        }
        self.by_members(&acc)
            .expect("the Frattini subgroup is a subgroup")
    }

    /// `{ g : g H g^-1 = H }`; always contains `H`.
    pub fn normalizer(&self, h: &Subgroup) -> &Subgroup {
        let g = &self.group;
        let mut members = ElemSet::new(g.order());
        for cand in 0..g.order() {
            if h
                .members
                .iter()
                .all(|x| h.members.contains(g.conjugate(cand, x)))
            {
                members.insert(cand);
            }
        }
        self.by_members(&members)
            .expect("a normalizer is a subgroup")
    }

    /// Number of subgroups of order `p^k` is congruent to 1 mod `p`.
    pub fn sylow_congruence_check(&self, p: usize, k: u32) -> Result<bool, Error> {
        let pk = p.pow(k);
        if pk == 0 || !self.group.order().is_multiple_of(pk) {
            return Err(Error::Domain {
                arg: "p^k",
                value: pk,
                reason: format!("does not divide the group order {}", self.group.order()),
            });
        }
        let count = self.counts_by_order.get(&pk).copied().unwrap_or(0);
        Ok(count % p == 1)
    }

    /// Verifies `|XY| |X n Y| = |X| |Y|` by forming the set `XY` directly.
    pub fn product_formula_check(&self, x: &Subgroup, y: &Subgroup) -> bool {
        let g = &self.group;
        let mut xy = ElemSet::new(g.order());
        for a in x.members.iter() {
            for b in y.members.iter() {
                xy.insert(g.mul(a, b));
            }
        }
        xy.len() * x.members.intersection_len(&y.members) == x.order * y.order
    }

    /// Nontrivial normal subgroups with no smaller nontrivial normal subgroup
    /// inside them.
    pub fn minimal_normal_subgroups(&self) -> Vec<&Subgroup> {
        let normals: Vec<&Subgroup> = self
            .subgroups
            .iter()
            .filter(|s| s.is_normal && s.order > 1)
            .collect();
        normals
            .iter()
            .filter(|n| {
                !normals
                    .iter()
                    .any(|m| m.order < n.order && m.members.is_subset_of(&n.members))
            })
            .copied()
            .collect()
    }

    /// True when every non-identity member has the same prime order and the
    /// members commute pairwise.
    pub fn is_elementary_abelian(&self, s: &Subgroup) -> bool {
        let g = &self.group;
        let members = s.members.to_vec();
        let Some(&first) = members.iter().find(|&&x| x != 0) else {
            return true; // the trivial subgroup, vacuously
        };
        let p = g.element_order(first);
        if factorize(p).len() != 1 || factorize(p)[0].1 != 1 {
            return false;
        }
        members.iter().all(|&x| x == 0 || g.element_order(x) == p)
            && members
                .iter()
                .all(|&x| members.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
    }

    pub fn export_json(&self) -> String {
        #[derive(Serialize)]
        struct SubgroupDoc {
            id: usize,
            order: usize,
            members: Vec<usize>,
            normal: bool,
            maximal: bool,
        }
        #[derive(Serialize)]
        struct LatticeDoc<'a> {
            group: &'a str,
            order: usize,
            counts_by_order: &'a BTreeMap<usize, usize>,
            subgroups: Vec<SubgroupDoc>,
        }
        let doc = LatticeDoc {
            group: self.group.spec_text(),
            order: self.group.order(),
            counts_by_order: &self.counts_by_order,
            subgroups: self
                .subgroups
                .iter()
                .map(|s| SubgroupDoc {
                    id: s.id,
                    order: s.order,
                    members: s.members.to_vec(),
                    normal: s.is_normal,
                    maximal: s.is_maximal,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("lattice document serializes")
    }

    /// Per-order counts as a small text table.
    pub fn export_text(&self) -> String {
        let mut out = format!(
            "group: {}\norder: {}\nsubgroups: {}\n",
            self.group.spec_text(),
            self.group.order(),
            self.subgroups.len()
        );
        out.push_str("order  count\n");
        for (order, count) in &self.counts_by_order {
            out.push_str(&format!("{order:>5}  {count}\n"));
        }
        out
    }
}
