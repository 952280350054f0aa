//! Isomorphism testing by backtracking over images of a generating set,
//! pruning with element-order profiles, center size, and derived-subgroup
//! size.

use crate::error::Error;
use crate::group::FiniteGroup;
use crate::Limits;

pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup, limits: &Limits) -> Result<bool, Error> {
    for gr in [g, h] {
        if gr.order() > limits.max_iso_order {
            return Err(Error::IsoBound {
                order: gr.order(),
                bound: limits.max_iso_order,
            });
        }
    }
    if g.order() != h.order() {
        return Ok(false);
    }
    let mut orders_g: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
    let mut orders_h: Vec<usize> = (0..h.order()).map(|x| h.element_order(x)).collect();
    let raw_orders_h = orders_h.clone();
    orders_g.sort_unstable();
    orders_h.sort_unstable();
    if orders_g != orders_h {
        return Ok(false);
    }
    if g.is_abelian() != h.is_abelian()
        || g.center().len() != h.center().len()
        || g.derived_subgroup().len() != h.derived_subgroup().len()
    {
        return Ok(false);
    }

    let gens = g.generating_set();
    if gens.is_empty() {
        return Ok(true); // both trivial
    }
    let mut images = vec![0usize; gens.len()];
    Ok(assign(g, h, &gens, &raw_orders_h, &mut images, 0))
}

fn assign(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    orders_h: &[usize],
    images: &mut [usize],
    depth: usize,
) -> bool {
    if depth == gens.len() {
        return extend(g, h, gens, images) == Some(g.order());
    }
    let want = g.element_order(gens[depth]);
    for cand in 0..h.order() {
        if orders_h[cand] != want {
            continue;
        }
        images[depth] = cand;
        if extend(g, h, &gens[..=depth], &images[..=depth]).is_some()
            && assign(g, h, gens, orders_h, images, depth + 1)
        {
            return true;
        }
    }
    false
}

/// Grow the map determined by `gens -> images` over the subgroup the prefix
/// generates. Returns the number of elements covered when the map extends to
/// a consistent injection, `None` on any conflict.
fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<usize> {
    let n = g.order();
    let mut map: Vec<Option<usize>> = vec![None; n];
    let mut hit = vec![false; n];
    map[0] = Some(0);
    hit[0] = true;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        let xh = map[x].expect("queued elements are mapped");
        head += 1;
        for (&gen, &img) in gens.iter().zip(images) {
            let y = g.mul(x, gen);
            let yh = h.mul(xh, img);
            match map[y] {
                Some(existing) => {
                    if existing != yh {
                        return None;
                    }
                }
                None => {
                    if hit[yh] {
                        return None; // not injective
                    }
                    map[y] = Some(yh);
                    hit[yh] = true;
                    queue.push(y);
                }
            }
        }
    }
    Some(queue.len())
}
