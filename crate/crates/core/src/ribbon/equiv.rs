use alloc::vec::Vec;

use super::{flags, RibbonGraph};

impl RibbonGraph {
    /// Isomorphism of ribbon graphs that fixes every edge label. Vertex and
    /// half-edge labels, vertex order and the choice of which end of an edge
    /// is written first are all ignored.
    ///
    /// Works on flags: an isomorphism commutes with the three involutions and
    /// is fixed on a whole component once one flag's image is chosen, so each
    /// component costs at most four propagations.
    pub fn is_equivalent(&self, other: &RibbonGraph) -> bool {
        if self.vertex_count() != other.vertex_count() || self.edge_count() != other.edge_count() {
            return false;
        }
        // edge of self -> edge of other with the same label
        let mut edge_map = Vec::with_capacity(self.edge_count());
        for e in 0..self.edge_count() {
            match other.edge_index(self.edge_label(e)) {
                Some(f) => edge_map.push(f),
                None => return false,
            }
        }
        let ts = flags::involutions(self);
        let to = flags::involutions(other);
        let edge_of = |g: &RibbonGraph, f: usize| g.half_edge_edge(f >> 1);
        // flag of self -> required edge in other; flag of other -> its edge
        let want: Vec<usize> = (0..ts[0].len())
            .map(|f| edge_map[edge_of(self, f)])
            .collect();
        let have: Vec<usize> = (0..to[0].len()).map(|g| edge_of(other, g)).collect();

        let mut image = alloc::vec![usize::MAX; ts[0].len()];
        for start in 0..image.len() {
            if image[start] != usize::MAX {
                continue;
            }
            let [p, _] = other.halves(edge_map[edge_of(self, start)]);
            let found = [
                2 * p,
                2 * p + 1,
                2 * other.partner(p),
                2 * other.partner(p) + 1,
            ]
            .into_iter()
            .find_map(|target| {
                let mut trial = image.clone();
                extend(start, target, (&ts, &want), (&to, &have), &mut trial).then_some(trial)
            });
            match found {
                Some(trial) => image = trial,
                None => return false,
            }
        }
        // vertices with edges are matched through the flags; the rest are
        // isolated and only their number matters
        let isolated = |g: &RibbonGraph| {
            (0..g.vertex_count())
                .filter(|&v| g.rotation(v).is_empty())
                .count()
        };
        isolated(self) == isolated(other)
    }
}

type Side<'a> = (&'a [Vec<usize>; 3], &'a [usize]);

/// Propagates `start -> target` along the involutions; fails when a flag
/// would land in an edge with another label or gets two images.
fn extend(
    start: usize,
    target: usize,
    (ts, want): Side,
    (to, have): Side,
    image: &mut [usize],
) -> bool {
    let mut stack = alloc::vec![(start, target)];
    while let Some((f, g)) = stack.pop() {
        if want[f] != have[g] {
            return false;
        }
        match image[f] {
            x if x == g => continue,
            usize::MAX => image[f] = g,
            _ => return false,
        }
        for i in 0..3 {
            stack.push((ts[i][f], to[i][g]));
        }
    }
    true
}
