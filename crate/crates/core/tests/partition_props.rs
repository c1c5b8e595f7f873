use proptest::prelude::*;

use bcinterp::partition::*;

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(&v)
    })
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Brute force over all fillings with entries `1..=n`.
fn count_reverse_tableaux(mu: &Partition, n: usize) -> usize {
    let squares: Vec<(usize, usize)> = mu.squares().collect();
    let mut count = 0;
    let total = n.pow(squares.len() as u32);
    for code in 0..total {
        let mut c = code;
        let mut rows: Vec<Vec<usize>> = mu.parts().iter().map(|&p| vec![0; p]).collect();
        for &(i, j) in &squares {
            rows[i - 1][j - 1] = c % n + 1;
            c /= n;
        }
        if (ReverseTableau { shape: mu.clone(), n, rows }).is_valid() {
            count += 1;
        }
    }
    count
}

/// Hook-content formula for the number of tableaux with entries `<= n`.
fn hook_content(mu: &Partition, n: usize) -> usize {
    let (mut num, mut den) = (1i64, 1i64);
    for s in all_stats(mu, n) {
        num *= n as i64 + s.j as i64 - s.i as i64;
        den *= s.a + s.l + 1;
    }
    (num / den) as usize
}

proptest! {
    #[test]
    fn conjugation_and_statistics(mu in partition(5, 5), n in 5usize..8) {
        let c = mu.conjugate();
        prop_assert_eq!(c.conjugate(), mu.clone());
        prop_assert_eq!(c.weight(), mu.weight());
        let n_mu: usize = mu.parts().iter().enumerate().map(|(i, &p)| i * p).sum();
        prop_assert_eq!(mu.n_stat(), n_mu);
        prop_assert_eq!(n_mu, c.parts().iter().map(|&p| binom(p, 2)).sum::<usize>());
        let st = all_stats(&mu, n);
        prop_assert_eq!(st.len(), mu.weight());
        prop_assert_eq!(st.iter().map(|s| s.l).sum::<i64>(), n_mu as i64);
        prop_assert_eq!(st.iter().map(|s| s.a).sum::<i64>(), c.n_stat() as i64);
        prop_assert_eq!(st.iter().map(|s| s.l_co).sum::<i64>(), n_mu as i64);
        for s in &st {
            prop_assert!(s.a >= 0 && s.l >= 0);
            prop_assert_eq!(s.a + s.a_co + 1, mu.part(s.i) as i64);
            prop_assert_eq!(s.a_mirror, mu.part(s.i) as i64 + s.j as i64 - 1);
            prop_assert_eq!(s.l_mirror, s.l + 2 * (n as i64 - c.part(s.j) as i64));
        }
    }

    #[test]
    fn tilde_is_an_involution(mu in partition(3, 4)) {
        let (n, m) = (3, 4);
        let t = tilde(&mu, n, m).unwrap();
        prop_assert_eq!(t.weight() + mu.weight(), n * m);
        prop_assert_eq!(tilde(&t, m, n).unwrap(), mu);
    }

    #[test]
    fn interlacing_enumeration(mu in partition(4, 4), extra in 0usize..2) {
        let k = mu.len().saturating_sub(1) + extra;
        let below = interlacing_below(&mu, k);
        for nu in &below {
            prop_assert!(interlaces(nu, &mu));
            prop_assert!(nu.len() <= k);
        }
        let brute = partitions_upto(mu.weight(), k).into_iter().filter(|nu| interlaces(nu, &mu)).count();
        prop_assert_eq!(below.len(), brute);
    }
}

#[test]
fn tableau_counts() {
    for n in 1..=3 {
        for mu in partitions_upto(5, n) {
            let tabs = reverse_tableaux(&mu, n);
            assert!(tabs.iter().all(ReverseTableau::is_valid));
            assert_eq!(tabs.len(), count_reverse_tableaux(&mu, n), "{mu} n={n}");
            assert_eq!(tabs.len(), hook_content(&mu, n), "{mu} n={n}");
        }
    }
}

#[test]
fn partition_counts() {
    // p(w) for w = 0..8, unrestricted length
    let p = [1, 1, 2, 3, 5, 7, 11, 15, 22];
    for (w, &c) in p.iter().enumerate() {
        assert_eq!(partitions_of(w, w, w).len(), c);
    }
    assert_eq!(partitions_upto(8, 8).len(), p.iter().sum::<usize>());
    for (n, m) in [(1, 1), (2, 2), (2, 3), (3, 3)] {
        assert_eq!(box_partitions(n, m).len(), binom(n + m, n));
    }
    assert_eq!(tilde(&Partition::new(&[3]), 2, 2), Err(bcinterp::Error::NotInBox { n: 2, m: 2 }));
    assert!(square_stats(&Partition::new(&[2]), 1, 2, 1).is_err());
}

#[test]
fn partition_text() {
    assert_eq!("2,1".parse::<Partition>().unwrap(), Partition::new(&[2, 1]));
    assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
    assert!("1,2".parse::<Partition>().is_err());
    assert_eq!(Partition::new(&[3, 1, 0]).to_string(), "3,1");
}
