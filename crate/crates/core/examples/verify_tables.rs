//! Recompute the quaternion and octonion conversion tables from the
//! multiplication tables and check the transcribed copies against them.

use fdalgebra::verify;
use fdalgebra::Result;

fn main() -> Result<()> {
    let o = verify::octonion_sign_tables()?;
    println!("octonion F =\n{}\nF^-1 = 1/{} *\n{}", o.f, o.denominator, o.scaled_inverse());
    for report in [verify::quaternion_tables()?, verify::octonion_tables()?, verify::conjugation_identities(20, 7)?] {
        println!("{}: {}/{} checks pass", report.subject, report.pass_count(), report.checks.len());
        for n in &report.notes {
            println!("  {n}");
        }
    }
    println!("printed rows that differ: {:?}", verify::octonion_inverse_differences()?);
    Ok(())
}
