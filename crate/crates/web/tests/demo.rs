use cliffordinkra::geometry::genus_formula;
use cliffordinkra::Cliffordinkra;
use cliffordinkra_web::{genus_view, minrep_table, quotient_view};
use serde_json::Value;

#[test]
fn drawn_graph_round_trips_as_json() {
    let v: Value = serde_json::from_str(&quotient_view(8, "11110000 00001111", "+-").unwrap()).unwrap();
    let g = Cliffordinkra::from_json(&v["graph"].to_string()).unwrap();
    assert_eq!(g.num_vertices(), 64);
    assert_eq!(v["vertices"], 64);
    assert_eq!(v["valid"], true);
}

#[test]
fn table_genus_agrees_with_closed_form() {
    let rows: Value = serde_json::from_str(&minrep_table(12).unwrap()).unwrap();
    for row in rows.as_array().unwrap().iter().skip(2) {
        let n = row["n"].as_u64().unwrap() as usize;
        let k = row["k"].as_u64().unwrap() as usize;
        if let Ok(expected) = genus_formula(n, k) {
            assert_eq!(row["genus"], expected, "n = {n}");
        }
    }
}

#[test]
fn genus_is_the_same_for_every_rainbow() {
    let v: Value = serde_json::from_str(&genus_view(6, "111100", "-", "0,3,1,4,2,5").unwrap()).unwrap();
    let genus = &v["stats"]["genus"];
    let all = v["all"].as_array().unwrap();
    assert_eq!(all.len(), 60);
    assert!(all.iter().all(|r| &r["genus"] == genus));
}
