//! Prints the hook-coefficient deviations file.
fn main() -> Result<(), immanant::Error> {
    let records = immanant::hook::deviation_records()?;
    print!("{}", immanant::hook::render_deviations(&records));
    Ok(())
}
