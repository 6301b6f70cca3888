//! Multi-interval set cover: atoms, greedy cover, ply, and the embedding of
//! plain set cover.

use aggucluster::oracle::brute_multi_interval_cover;
use aggucluster::setcover::{
    atomic_decomposition, multi_interval_set_cover, ply, setcover_to_multiinterval, MultiIntervalInstance,
};

fn main() -> aggucluster::Result<()> {
    let inst = MultiIntervalInstance::from_pairs(&[&[(0.0, 2.0)], &[(1.0, 3.0)], &[(0.0, 1.0), (2.0, 3.0)]])?;

    let ci = atomic_decomposition(&inst);
    for (i, a) in ci.atoms.iter().enumerate() {
        println!("atom {i}: [{}, {}]", a.lo, a.hi);
    }
    for (i, c) in ci.covers.iter().enumerate() {
        println!("set {i} covers atoms {c:?}");
    }

    let sol = multi_interval_set_cover(&inst)?;
    println!("greedy picks {:?} (bound factor {:.3})", sol.chosen, ci.greedy_factor());
    println!("exact optimum {}", brute_multi_interval_cover(&inst)?.optimum);
    println!("ply {}", ply(&inst)?);

    // plain set cover over {1, 2, 3}
    let embedded = setcover_to_multiinterval(3, &[vec![1, 2], vec![2, 3], vec![3]])?;
    println!("embedded cover {:?}", multi_interval_set_cover(&embedded)?.chosen);
    Ok(())
}
