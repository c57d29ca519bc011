//! Lexicographic enumeration of small index subsets.

use std::ops::ControlFlow;

use rayon::prelude::*;

/// Number of non-empty subsets of `0..m` with at most `t` members.
pub(crate) fn count_up_to(m: usize, t: usize) -> u128 {
    let mut total = 0u128;
    let mut binom = 1u128;
    for k in 1..=t.min(m) {
        binom = binom * (m - k + 1) as u128 / k as u128;
        total = total.saturating_add(binom);
    }
    total
}

/// Visits every sorted subset of `0..m` of size `1..=t` whose smallest member
/// is `first`, in lexicographic order, until `visit` breaks.
fn walk_from<B>(
    m: usize,
    t: usize,
    first: usize,
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    fn rec<B>(
        m: usize,
        t: usize,
        prefix: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        visit(prefix)?;
        if prefix.len() < t {
            let next = prefix.last().map_or(0, |&l| l + 1);
            for j in next..m {
                prefix.push(j);
                rec(m, t, prefix, visit)?;
                prefix.pop();
            }
        }
        ControlFlow::Continue(())
    }
    let mut prefix = Vec::with_capacity(t);
    prefix.push(first);
    match rec(m, t, &mut prefix, visit) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    }
}

/// Sequential lexicographic walk over all subsets of size `1..=t`.
pub(crate) fn walk<B>(
    m: usize,
    t: usize,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    (0..m).find_map(|first| walk_from(m, t, first, &mut visit))
}

/// The result for the lexicographically smallest subset on which `probe`
/// returns `Some`. Branches by smallest member run in parallel; the answer
/// does not depend on scheduling.
pub(crate) fn first_hit<W, F>(m: usize, t: usize, probe: F) -> Option<W>
where
    W: Send,
    F: Fn(&[usize]) -> Option<W> + Sync,
{
    (0..m).into_par_iter().find_map_first(|first| {
        walk_from(m, t, first, &mut |s| match probe(s) {
            Some(w) => ControlFlow::Break(w),
            None => ControlFlow::Continue(()),
        })
    })
}
