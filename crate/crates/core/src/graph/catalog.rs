use rayon::prelude::*;

use crate::error::{Error, Result};

use super::{canonical_form, Graph};

/// Largest order [`enumerate_catalog`] will build.
pub const MAX_CATALOG_ORDER: usize = 8;

/// One canonical representative per isomorphism class, for every order
/// `1..=n_max`. Graphs are sorted by order, then by canonical bit string.
#[derive(Debug, Clone)]
pub struct GraphCatalog {
    n_max: usize,
    by_order: Vec<Vec<Graph>>,
}

impl GraphCatalog {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Representatives of order `n` (empty for `n == 0` or `n > n_max`).
    pub fn of_order(&self, n: usize) -> &[Graph] {
        match n {
            0 => &[],
            n if n <= self.n_max => &self.by_order[n - 1],
            _ => &[],
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &Graph> + '_ {
        self.by_order.iter().flatten()
    }

    /// All representatives with order at most `n`.
    pub fn up_to(&self, n: usize) -> impl Iterator<Item = &Graph> + '_ {
        self.by_order.iter().take(n).flatten()
    }

    pub fn len(&self) -> usize {
        self.by_order.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn counts(&self) -> Vec<usize> {
        self.by_order.iter().map(Vec::len).collect()
    }
}

/// Grows order `n` from order `n - 1` by attaching a new vertex in every
/// possible way, deduplicating by canonical form.
pub fn enumerate_catalog(n_max: usize) -> Result<GraphCatalog> {
    if n_max > MAX_CATALOG_ORDER {
        return Err(Error::OrderTooLarge { n: n_max, max: MAX_CATALOG_ORDER });
    }
    let mut by_order: Vec<Vec<Graph>> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let graphs = match by_order.last() {
            None => vec![Graph::empty(1)?],
            Some(prev) => extend(prev, n),
        };
        by_order.push(graphs);
    }
    Ok(GraphCatalog { n_max, by_order })
}

fn extend(prev: &[Graph], n: usize) -> Vec<Graph> {
    let mut forms: Vec<_> = prev
        .par_iter()
        .flat_map_iter(|base| {
            (0u64..1 << (n - 1)).map(move |mask| {
                let mut g = Graph::empty(n).expect("catalog order is small");
                for (u, v) in base.edges() {
                    g.add_edge(u, v);
                }
                for u in super::bits(mask) {
                    g.add_edge(u, n - 1);
                }
                canonical_form(&g).expect("catalog order is small")
            })
        })
        .collect();
    forms.par_sort_unstable();
    forms.dedup();
    forms.iter().map(|f| f.to_graph()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let cat = enumerate_catalog(5).unwrap();
        assert_eq!(cat.counts(), vec![1, 2, 4, 11, 34]);
        assert_eq!(cat.len(), 52);
        assert_eq!(cat.of_order(4).len(), 11);
        assert_eq!(cat.up_to(3).count(), 7);
        assert!(cat.of_order(6).is_empty());
    }

    #[test]
    fn single_vertex() {
        let cat = enumerate_catalog(1).unwrap();
        assert_eq!(cat.iter().collect::<Vec<_>>(), vec![&Graph::empty(1).unwrap()]);
    }

    #[test]
    fn too_large() {
        assert!(matches!(enumerate_catalog(9), Err(Error::OrderTooLarge { .. })));
    }
}
