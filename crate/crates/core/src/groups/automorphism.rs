//! Automorphism groups of designs by partition refinement and backtracking.
//!
//! Search nodes are colourings of the points and blocks. Colours are ranks
//! of sorted signature tuples, so refinement commutes with relabelling and
//! equivalent nodes carry identical colour vectors up to the relabelling.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::perm::{preserves_design, Permutation};
use super::schreier::{orbit_of, PermutationGroup};
use crate::designs::Design;

/// Block counts above this skip the pairwise intersection signature.
const MAX_INTERSECTION_BLOCKS: usize = 20_000;

struct Incidence<'a> {
    design: &'a Design,
    block_points: Vec<Vec<u32>>,
    point_blocks: Vec<Vec<u32>>,
}

#[derive(Clone)]
struct Node {
    points: Vec<u32>,
    blocks: Vec<u32>,
    point_cells: usize,
    trace: u64,
}

impl Node {
    fn is_discrete(&self) -> bool {
        self.point_cells == self.points.len()
    }

    /// Smallest non-singleton point cell, ties to the lower colour.
    fn target_cell(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.point_cells];
        for &c in &self.points {
            sizes[c as usize] += 1;
        }
        let colour = (0..sizes.len())
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c))
            .expect("not discrete");
        (0..self.points.len())
            .filter(|&x| self.points[x] as usize == colour)
            .collect()
    }

    fn individualize(&self, x: usize) -> Node {
        let mut child = self.clone();
        child.points[x] = self.point_cells as u32;
        child.point_cells += 1;
        child
    }
}

/// Replace each colour by the rank of its signature among all signatures.
fn rank<S: Ord + Clone + Hash>(sigs: Vec<S>, trace: &mut DefaultHasher) -> (Vec<u32>, usize) {
    let mut distinct = sigs.clone();
    distinct.sort();
    distinct.dedup();
    distinct.hash(trace);
    let ranks = sigs
        .iter()
        .map(|s| distinct.binary_search(s).expect("present") as u32)
        .collect();
    (ranks, distinct.len())
}

impl<'a> Incidence<'a> {
    fn new(design: &'a Design) -> Self {
        let block_points: Vec<Vec<u32>> = design
            .blocks()
            .iter()
            .map(|b| b.ones_iter().map(|p| p as u32).collect())
            .collect();
        let mut point_blocks = vec![Vec::new(); design.points()];
        for (i, pts) in block_points.iter().enumerate() {
            for &p in pts {
                point_blocks[p as usize].push(i as u32);
            }
        }
        Self {
            design,
            block_points,
            point_blocks,
        }
    }

    fn root(&self) -> Node {
        let blocks = self.design.blocks();
        let block_sigs: Vec<Vec<u32>> = if blocks.len() <= MAX_INTERSECTION_BLOCKS {
            let k = self.design.block_size();
            blocks
                .iter()
                .map(|b| {
                    let mut counts = vec![0u32; k + 1];
                    for other in blocks {
                        counts[b.intersection_weight(other)] += 1;
                    }
                    counts
                })
                .collect()
        } else {
            vec![Vec::new(); blocks.len()]
        };
        let mut h = DefaultHasher::new();
        let (block_colours, block_cells) = rank(block_sigs, &mut h);
        let mut node = Node {
            points: vec![0; self.design.points()],
            blocks: block_colours,
            point_cells: 1,
            trace: h.finish(),
        };
        self.refine(&mut node, block_cells);
        node
    }

    fn refine(&self, node: &mut Node, mut block_cells: usize) {
        let mut h = DefaultHasher::new();
        node.trace.hash(&mut h);
        loop {
            let sigs: Vec<(u32, Vec<u32>)> = self
                .point_blocks
                .iter()
                .enumerate()
                .map(|(x, bs)| {
                    let mut s: Vec<u32> = bs.iter().map(|&b| node.blocks[b as usize]).collect();
                    s.sort_unstable();
                    (node.points[x], s)
                })
                .collect();
            let (points, point_cells) = rank(sigs, &mut h);
            node.points = points;

            let sigs: Vec<(u32, Vec<u32>)> = self
                .block_points
                .iter()
                .enumerate()
                .map(|(b, ps)| {
                    let mut s: Vec<u32> = ps.iter().map(|&p| node.points[p as usize]).collect();
                    s.sort_unstable();
                    (node.blocks[b], s)
                })
                .collect();
            let (blocks, new_block_cells) = rank(sigs, &mut h);
            node.blocks = blocks;

            let stable = point_cells == node.point_cells && new_block_cells == block_cells;
            node.point_cells = point_cells;
            block_cells = new_block_cells;
            if stable {
                break;
            }
        }
        node.trace = h.finish();
    }

    fn child(&self, node: &Node, x: usize) -> Node {
        let mut child = node.individualize(x);
        let block_cells = child.blocks.iter().max().map_or(0, |&m| m as usize + 1);
        self.refine(&mut child, block_cells);
        child
    }
}

/// Maps the point coloured `c` in `first` to the point coloured `c` in `leaf`.
fn leaf_map(first: &Node, leaf: &Node) -> Permutation {
    let n = first.points.len();
    let mut by_colour = vec![0usize; n];
    for (y, &c) in leaf.points.iter().enumerate() {
        by_colour[c as usize] = y;
    }
    Permutation::from_images_unchecked(
        first
            .points
            .iter()
            .map(|&c| by_colour[c as usize])
            .collect(),
    )
}

struct Search<'a> {
    inc: Incidence<'a>,
    /// Nodes along the first path; the last one is discrete.
    path: Vec<Node>,
}

impl Search<'_> {
    /// Depth-first search below `node` (at `depth`) for a leaf equivalent to
    /// the first leaf.
    fn find(&self, node: &Node, depth: usize) -> Option<Permutation> {
        let reference = self.path.get(depth)?;
        if node.trace != reference.trace || node.point_cells != reference.point_cells {
            return None;
        }
        if node.is_discrete() {
            let g = leaf_map(self.path.last().expect("nonempty"), node);
            return preserves_design(&g, self.inc.design)
                .expect("degrees agree")
                .then_some(g);
        }
        for x in node.target_cell() {
            if let Some(g) = self.find(&self.inc.child(node, x), depth + 1) {
                return Some(g);
            }
        }
        None
    }
}

/// Full automorphism group of a design.
pub fn design_automorphism_group(d: &Design) -> PermutationGroup {
    let n = d.points();
    let inc = Incidence::new(d);
    let mut path = vec![inc.root()];
    let mut base = Vec::new();
    let mut cells = Vec::new();
    while !path.last().expect("nonempty").is_discrete() {
        let node = path.last().expect("nonempty");
        let cell = node.target_cell();
        let child = inc.child(node, cell[0]);
        base.push(cell[0]);
        cells.push(cell);
        path.push(child);
    }
    let search = Search { inc, path };

    // levels[i] holds generators fixing base[..i] and moving base[i]
    let mut levels: Vec<Vec<Permutation>> = vec![Vec::new(); base.len()];
    for i in (0..base.len()).rev() {
        let mut refuted: Vec<usize> = Vec::new();
        for &c in &cells[i] {
            if c == base[i] {
                continue;
            }
            let gens: Vec<&Permutation> = levels[i..].iter().flatten().collect();
            let orbit = orbit_of(n, &gens, c);
            if orbit.contains(&base[i]) || refuted.iter().any(|r| orbit.contains(r)) {
                continue;
            }
            let node = search.inc.child(&search.path[i], c);
            match search.find(&node, i + 1) {
                Some(g) => levels[i].push(g),
                None => refuted.push(c),
            }
        }
    }
    let gens = levels.into_iter().flatten().collect();
    PermutationGroup::new(n, gens).expect("degrees agree")
}
