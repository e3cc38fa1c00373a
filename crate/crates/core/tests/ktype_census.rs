use sl3gk::ktype::{block_labels, delta, epsilon, ktype_info, multiplicity, row_offset_n, z_membership, SeriesParams};
use sl3gk::lie::Parabolic;

fn all_series() -> Vec<SeriesParams> {
    let mut out = Vec::new();
    for (s1, s2) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        out.push(SeriesParams::p0(s1, s2).unwrap());
    }
    for k in 2..=6 {
        out.push(SeriesParams::maximal(Parabolic::P1, k).unwrap());
        out.push(SeriesParams::maximal(Parabolic::P2, k).unwrap());
    }
    out
}

/// `Z(sigma; l)` straight from its definition.
fn z_set(s1: i64, s2: i64, l: i64) -> Vec<i64> {
    let eps = (l - s1 - s2).rem_euclid(2);
    let top = if eps == 0 { l } else { l - 1 };
    (0..=top).filter(|k| (k - (l - s2)).rem_euclid(2) == 0).collect()
}

fn closed_form(params: &SeriesParams, l: i64) -> i64 {
    match (params.sigma(), params.blattner()) {
        (Some((0, 0)), _) if l % 2 == 0 => (l + 2) / 2,
        (Some((0, 0)), _) => (l - 1) / 2,
        (Some(_), _) if l % 2 == 0 => l / 2,
        (Some(_), _) => (l + 1) / 2,
        (None, Some(k)) if k > l => 0,
        (None, Some(k)) if (l - k) % 2 == 0 => (l - k + 2) / 2,
        (None, Some(k)) => (l - k + 1) / 2,
        (None, None) => unreachable!(),
    }
}

#[test]
fn closed_forms_count_the_blocks() {
    for params in all_series() {
        for l in 0..=200 {
            let labels = block_labels(&params, l);
            assert_eq!(labels.len() as i64, multiplicity(&params, l), "{params} l={l}");
            assert_eq!(multiplicity(&params, l), closed_form(&params, l), "{params} l={l}");
        }
    }
}

#[test]
fn p0_blocks_enumerate_z() {
    for (s1, s2) in [(0u8, 0u8), (1, 0), (0, 1), (1, 1)] {
        let params = SeriesParams::p0(s1, s2).unwrap();
        for l in 0..=200 {
            let z = z_set(s1 as i64, s2 as i64, l);
            assert_eq!(block_labels(&params, l), z, "sigma=({s1},{s2}) l={l}");
            for p in -2..=l + 2 {
                assert_eq!(z_membership(&params, l, p).unwrap(), z.contains(&p), "l={l} p={p}");
            }
            assert_eq!(epsilon(&params, l), Some((l - s1 as i64 - s2 as i64).rem_euclid(2) as u8));
        }
    }
    assert!(z_membership(&SeriesParams::maximal(Parabolic::P1, 2).unwrap(), 2, 0).is_err());
}

#[test]
fn labels_have_the_block_parity() {
    for params in all_series() {
        for l in 0..=200 {
            let info = ktype_info(&params, l);
            let d = delta(&params, l) as i64;
            assert_eq!(info.multiplicity as usize, info.p_list.len());
            if let Some(&first) = info.p_list.first() {
                assert_eq!(first, d);
            }
            for w in info.p_list.windows(2) {
                assert_eq!(w[1] - w[0], 2);
            }
            let bound = match params.blattner() {
                Some(k) => l - k,
                None => l,
            };
            assert!(info.p_list.iter().all(|&p| (p - d).rem_euclid(2) == 0 && p <= bound));
            let expected_delta = match (params.sigma(), params.blattner()) {
                (Some((_, s2)), _) => (l - s2 as i64).rem_euclid(2),
                (_, Some(k)) => (l - k).rem_euclid(2),
                _ => unreachable!(),
            };
            assert_eq!(d, expected_delta);
        }
    }
}

#[test]
fn tabulated_ktypes() {
    let p0 = SeriesParams::p0(0, 0).unwrap();
    let info = ktype_info(&p0, 4);
    assert_eq!((info.multiplicity, info.p_list), (3, vec![0, 2, 4]));
    let info = ktype_info(&p0, 1);
    assert_eq!((info.multiplicity, info.p_list), (0, vec![]));
    let p1 = SeriesParams::maximal(Parabolic::P1, 2).unwrap();
    assert_eq!(ktype_info(&p1, 1).multiplicity, 0);
    assert!(z_membership(&p0, 2, 0).unwrap());
    assert!(!z_membership(&p0, 2, 1).unwrap());
    assert!(z_membership(&p0, 2, 2).unwrap());
    let rows: Vec<(i64, i64)> = (0..=4).map(|l| (l, multiplicity(&p0, l))).collect();
    assert_eq!(rows, vec![(0, 1), (1, 0), (2, 2), (3, 1), (4, 3)]);
}

#[test]
fn row_offsets() {
    let p1 = SeriesParams::maximal(Parabolic::P1, 2).unwrap();
    assert_eq!(row_offset_n(&p1, 2, 1).unwrap(), 1);
    for params in all_series() {
        for l in 0..=12 {
            assert_eq!(row_offset_n(&params, l, 2).unwrap(), 0);
            assert_eq!(row_offset_n(&params, l, 0).unwrap(), 1);
            assert_eq!(row_offset_n(&params, l, -2).unwrap(), 2);
            assert!(row_offset_n(&params, l, 3).is_err());
        }
    }
    let p0 = SeriesParams::p0(0, 0).unwrap();
    assert_eq!(row_offset_n(&p0, 3, -1).unwrap(), 1);
    assert_eq!(row_offset_n(&p0, 2, -1).unwrap(), 2);
    assert_eq!(row_offset_n(&p0, 2, 1).unwrap(), 1);
    assert_eq!(row_offset_n(&p0, 3, 1).unwrap(), 0);
}

#[test]
fn params_are_validated() {
    assert!(SeriesParams::p0(2, 0).is_err());
    assert!(SeriesParams::maximal(Parabolic::P1, 1).is_err());
    assert!(SeriesParams::maximal(Parabolic::P0, 3).is_err());
    assert_eq!(SeriesParams::maximal(Parabolic::P2, 4).unwrap().minimal_ktype(), 4);
}
