//! Barycentric, stellar and Farey subdivisions of a rational triangle.

use polynerve::geometry::{
    barycentric_subdivision, elementary_farey, elementary_stellar, farey_mediant, is_refinement,
    is_unimodular_complex, RationalComplex, RationalPoint,
};

fn main() -> polynerve::error::Result<()> {
    let t = RationalComplex::standard_simplex(2);
    let sd = barycentric_subdivision(&t)?;
    println!("Sd: f-vector {:?}, {} simplices, refines {}", sd.f_vector(), sd.len(), is_refinement(&sd, &t));

    let p = RationalPoint::from_fractions(&[(1, 5), (2, 5)]);
    let s = elementary_stellar(&t, &p)?;
    println!("stellar at {p}: f-vector {:?}, unimodular {}", s.f_vector(), is_unimodular_complex(&s));

    let mut k = t.clone();
    for _ in 0..3 {
        let last = k.maximal_simplices().last().unwrap().clone();
        println!("Farey mediant of {:?}: {}", last, farey_mediant(&k.simplex(&last)));
        k = elementary_farey(&k, &last)?;
    }
    println!("after three Farey moves: {} vertices, unimodular {}", k.vertices().len(), is_unimodular_complex(&k));
    Ok(())
}
