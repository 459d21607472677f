use symprep_bench::{php_family, random_family};

#[test]
fn families_have_expected_shape() {
    let php = php_family(&[3, 8]);
    assert_eq!(php[0].0, "php(4,3)");
    assert_eq!((php[1].1.num_vars(), php[1].1.len()), (72, 297));
    let random = random_family(&[50], 1);
    assert_eq!(random, random_family(&[50], 1));
    assert!(random[0].1.len() <= 210);
}
