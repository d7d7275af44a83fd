//! Writes a generated surface in the text format, reads it back and prints
//! the JSON report.

use plconvex::gen::{generate, GenParams, Kind};
use plconvex::global::check;
use plconvex::{format, report};

fn main() -> plconvex::Result<()> {
    let s = generate(
        Kind::GreatSphere,
        &GenParams {
            n: 3,
            m: 4,
            seed: 1,
            ..GenParams::default()
        },
    )?
    .surface;
    let text = format::write(&s);
    print!("{text}");
    let back = format::parse(&text)?;
    assert_eq!(back, s);
    let verdict = check(&back)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report::to_json(&back, &verdict, None)).unwrap()
    );
    Ok(())
}
