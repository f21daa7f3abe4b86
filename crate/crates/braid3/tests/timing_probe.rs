use braid3::verify::*;

#[test]
fn timing_probe_sweep() {
    let r = verify_normalization_sweep(8);
    println!("sweep 8: {}", r.summary_line());
    assert!(r.pass(), "{:?}", &r.failures[..r.failures.len().min(3)]);
    let r = verify_genus_bound(8);
    println!("genus 8: {}", r.summary_line());
    assert!(r.pass(), "{:?}", &r.failures[..r.failures.len().min(3)]);
}
