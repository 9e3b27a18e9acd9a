//! Exhaustive generation of numerical semigroups by genus.
//!
//! The genus tree is rooted at `N`; the children of `H` are `H \ {g}` for each
//! minimal generator `g > F(H)`. Every numerical semigroup appears exactly
//! once, at depth equal to its genus.

pub mod sweep;

use crate::error::{Error, Result, MAX_BRUTE_FORCE_GENUS, MAX_ENUMERATION_GENUS};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug)]
pub struct EnumerationNode {
    pub semigroup: NumericalSemigroup,
    pub genus: usize,
    /// Minimal generators above the Frobenius number.
    pub removable: Vec<i64>,
}

impl EnumerationNode {
    pub fn new(semigroup: NumericalSemigroup) -> Self {
        let f = semigroup.frobenius();
        let removable = semigroup
            .min_gens()
            .iter()
            .copied()
            .filter(|&g| g > f)
            .collect();
        Self {
            genus: semigroup.genus(),
            semigroup,
            removable,
        }
    }

    pub fn root() -> Self {
        Self::new(NumericalSemigroup::natural())
    }

    pub fn children(&self) -> Vec<EnumerationNode> {
        self.removable
            .iter()
            .map(|&g| Self::new(remove_generator(&self.semigroup, g)))
            .collect()
    }
}

/// `H \ {g}` for a minimal generator `g > F(H)`.
///
/// Elements of the child below `g` come from the other generators, and
/// `g + 1 ..= 2g + 1` covers a full residue system above `g`.
fn remove_generator(h: &NumericalSemigroup, g: i64) -> NumericalSemigroup {
    let gens: Vec<i64> = h
        .min_gens()
        .iter()
        .copied()
        .filter(|&x| x != g)
        .chain(g + 1..=2 * g + 1)
        .collect();
    NumericalSemigroup::from_generators(&gens).expect("child of a numerical semigroup")
}

fn check_genus(g_max: usize, limit: usize) -> Result<()> {
    if g_max > limit {
        Err(Error::ResourceLimit {
            what: "genus",
            value: g_max as i64,
            limit: limit as i64,
        })
    } else {
        Ok(())
    }
}

/// Depth-first walk of the genus tree.
pub struct GenusTree {
    stack: Vec<EnumerationNode>,
    g_max: usize,
}

impl Iterator for GenusTree {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<Self::Item> {
        let node = self.stack.pop()?;
        if node.genus < self.g_max {
            let mut kids = node.children();
            kids.reverse();
            self.stack.extend(kids);
        }
        Some(node.semigroup)
    }
}

/// Every numerical semigroup of genus at most `g_max`, depth-first.
pub fn enumerate_by_genus(g_max: usize) -> Result<GenusTree> {
    check_genus(g_max, MAX_ENUMERATION_GENUS)?;
    Ok(GenusTree {
        stack: vec![EnumerationNode::root()],
        g_max,
    })
}

/// Number of numerical semigroups of each genus `0..=g_max`.
pub fn count_by_genus(g_max: usize) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; g_max + 1];
    for h in enumerate_by_genus(g_max)? {
        counts[h.genus()] += 1;
    }
    Ok(counts)
}

/// Independent enumeration over gap sets.
///
/// A semigroup of genus `g` has all its gaps in `[1, 2g - 1]`, so it is
/// enough to decide membership of every integer below `2 g_max`: an integer
/// is forced in when it is a sum of two smaller members, and otherwise may be
/// a gap while the gap budget lasts.
pub fn brute_force_enumerate(g_max: usize) -> Result<Vec<NumericalSemigroup>> {
    check_genus(g_max, MAX_BRUTE_FORCE_GENUS)?;
    let top = 2 * g_max as i64;
    let mut member = vec![false; top as usize + 1];
    member[0] = true;
    let mut out = Vec::new();
    brute_force_step(1, top, g_max, 0, &mut member, &mut out);
    Ok(out)
}

fn brute_force_step(
    x: i64,
    top: i64,
    g_max: usize,
    gaps: usize,
    member: &mut Vec<bool>,
    out: &mut Vec<NumericalSemigroup>,
) {
    if x >= top {
        // Everything from `top` on is in; generators up to `2 top + 1` suffice.
        let gens: Vec<i64> = (1..=2 * top + 1)
            .filter(|&m| m >= top || member[m as usize])
            .collect();
        out.push(NumericalSemigroup::from_generators(&gens).expect("co-finite set"));
        return;
    }
    let forced = (1..x).any(|y| member[y as usize] && member[(x - y) as usize]);
    member[x as usize] = true;
    brute_force_step(x + 1, top, g_max, gaps, member, out);
    if !forced && gaps < g_max {
        member[x as usize] = false;
        brute_force_step(x + 1, top, g_max, gaps + 1, member, out);
        member[x as usize] = true;
    }
}
