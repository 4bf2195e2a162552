use rankmetric::paperlab::*;
use std::time::Instant;
fn main() {
    let t = Instant::now();
    let i = build_instance(5).unwrap();
    let d = i.code_c.delsarte_dual();
    println!(
        "dual5 {:?} {:?} {:?}",
        d.min_distance(),
        d.strategy_costs(),
        t.elapsed()
    );
    let t = Instant::now();
    let i = build_instance(9).unwrap();
    println!("c9 {:?} {:?}", i.code_c.min_distance(), t.elapsed());
    let t = Instant::now();
    let (n, p) = table1_row(5).unwrap();
    let mut job = SearchJob::new(n, 4, p);
    job.first_k = Some(1);
    let r = table1_search(&job).unwrap();
    println!(
        "row5 {:?} examined {} {:?}",
        r.hits.first().map(|h| h.index),
        r.examined,
        t.elapsed()
    );
    let t = Instant::now();
    let c = integer_coeffs(4, 5, &[1, 1, 1, -1]).unwrap();
    let v = table1_verify(4, 5, &c).unwrap();
    println!("row4 q5 {} {:?}", v.is_mrd, t.elapsed());
}
