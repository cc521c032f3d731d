//! A poset realised as a rational complex, and its upsets as open sets.

use polynerve::geometry::{geometric_realization, upset_to_open, RationalPoint};
use polynerve::poset::FinitePoset;

fn main() -> polynerve::error::Result<()> {
    let fork = FinitePoset::build(&["root", "left", "right"], &[("root", "left"), ("root", "right")])?;
    let k = geometric_realization(&fork)?;
    println!("{} vertices in dimension {}, f-vector {:?}", k.vertices().len(), k.ambient_dim(), k.f_vector());
    for v in k.vertices() {
        println!("  vertex {v}");
    }

    let faces = k.face_poset();
    let star = upset_to_open(&k, faces.up_set(faces.index_of("{0}")?))?;
    println!("open star of vertex 0 has {} simplices", star.simplices(&k).len());
    for coords in [[(1, 1), (0, 1), (0, 1)], [(1, 2), (1, 2), (0, 1)], [(0, 1), (1, 1), (0, 1)]] {
        let x = RationalPoint::from_fractions(&coords);
        println!("  contains {x}: {}", star.contains(&k, &x)?);
    }
    Ok(())
}
