//! Deciding whether one tuple can reach another: the conserved invariants
//! and the membership rules for every diagram flavor.
//!
//! Run with `cargo run --example orbit_membership`.

use updown::{membership, orbit_invariants, ColorVector, OrbitFlavor};

fn main() -> updown::Result<()> {
    // Two invariants decide classical reachability: the component sum
    // (trace) and the number of type-I components, where entry x_i is
    // type I when exactly one of i and x_i is odd.
    for text in ["0,2,1,-1", "2,1,2,1", "1,4,-7,-1,2,9"] {
        let x = ColorVector::parse(text)?;
        let inv = orbit_invariants(&x);
        println!(
            "({text}): trace {}, type-I {}, type-II {}",
            inv.trace, inv.type_one, inv.type_two
        );
    }

    let x = ColorVector::parse("1,4,-7,-1,2,9")?;
    let y = ColorVector::parse("4,0,8,-5,3,-2")?;
    let pairs = [
        (OrbitFlavor::classical(), "classical"),
        (OrbitFlavor::classical().irreducible(), "classical, irreducible"),
        (OrbitFlavor::classical().pure(), "classical, pure"),
        (OrbitFlavor::virtual_diagrams(), "virtual"),
    ];
    println!("\nfrom {x} to {y}:");
    for (flavor, name) in pairs {
        let verdict = membership(&x, &y, flavor)?;
        println!("  {name:24} member: {:5} ({})", verdict.is_member(), verdict.reason());
    }

    // On two strands, irreducible classical diagrams reach only three
    // tuples: the start and its two single-crossing images.
    let x = ColorVector::parse("3,0")?;
    println!("\nirreducible degree-2 targets from {x}:");
    for candidate in ["3,0", "1,2", "-1,4", "5,-2"] {
        let y = ColorVector::parse(candidate)?;
        let verdict = membership(&x, &y, OrbitFlavor::classical().irreducible())?;
        println!("  -> {candidate:5} member: {}", verdict.is_member());
    }

    // Virtual diagrams only conserve the trace.
    let x = ColorVector::parse("8,4,2,2")?;
    let y = ColorVector::parse("2,3,5,6")?;
    let verdict = membership(&x, &y, OrbitFlavor::virtual_diagrams())?;
    println!("\nvirtual {x} -> {y}: member {}", verdict.is_member());
    Ok(())
}
