//! Build arrangements and enumerate their chambers.

use stabcover::arrangement::{build_coxeter_arrangement, cd4_arrangement, rank2_arrangement, restrict_to_flat, CoxeterType, Fan};

fn main() -> stabcover::Result<()> {
    let cd4 = cd4_arrangement();
    let fan = Fan::build(&cd4)?;
    println!("cD4: {} hyperplanes, {} chambers", cd4.len(), fan.len());
    for c in fan.chambers() {
        println!("  chamber {} signs {} rays {:?}", c.id, c.signs, c.rays);
    }

    for (ty, n) in [(CoxeterType::A, 2), (CoxeterType::A, 3), (CoxeterType::D, 4)] {
        let arr = build_coxeter_arrangement(ty, n)?;
        println!("{ty}{n}: {} hyperplanes, {} chambers", arr.len(), Fan::build(&arr)?.len());
    }
    for m in [3, 5, 8] {
        println!("I2({m}): {} chambers", Fan::build(&rank2_arrangement(m)?)?.len());
    }

    // restricting D4 to the line where two orthogonal roots vanish
    let d4 = build_coxeter_arrangement(CoxeterType::D, 4)?;
    let r = restrict_to_flat(&d4, &[0])?;
    println!("D4 restricted to H0: rank {}, {} hyperplanes, {} chambers", r.rank(), r.len(), Fan::build(&r)?.len());
    Ok(())
}
