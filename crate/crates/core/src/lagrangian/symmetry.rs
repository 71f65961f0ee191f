use crate::error::{Error, Result};
use crate::graph::RGraph;

/// Partition `[n]` into runs of consecutive vertices `i, i+1` with
/// `E_{i\(i+1)} = ∅`. For a left-compressed graph such vertices are
/// interchangeable, so some optimal weighting is constant on each run.
pub fn symmetry_classes(g: &RGraph) -> Result<Vec<Vec<u32>>> {
    if !g.is_left_compressed() {
        return Err(Error::NotLeftCompressed);
    }
    let mut classes: Vec<Vec<u32>> = Vec::new();
    for v in 1..=g.n() {
        let joins = v > 1 && g.difference_link(v - 1, v)?.is_empty();
        match classes.last_mut() {
            Some(last) if joins => last.push(v),
            _ => classes.push(vec![v]),
        }
    }
    Ok(classes)
}
