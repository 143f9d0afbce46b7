//! Run every property suite on cD4 and print a summary.

use stabcover::arrangement::cd4_arrangement;
use stabcover::verify::{verify, Config, Suite};

fn main() -> stabcover::Result<()> {
    let cfg = Config { samples: 50, seed: 7, ..Config::default() };
    let report = verify(&cd4_arrangement(), Suite::All, &cfg)?;
    for c in &report.checks {
        println!("{:32} {:?} ({} cases)", c.id, c.status, c.cases);
    }
    println!("all passed: {}", report.passed());
    Ok(())
}
