from cubicsd import dataset


def test_table_entry_counts():
    assert dataset.TABLE_SIZES == {1: 5, 2: 20, 3: 121, 4: 118}
    for tid, size in dataset.TABLE_SIZES.items():
        assert len(dataset.table_entries(tid)) == size
    assert len(dataset.table_entries()) == 264


def test_table_entries_validate():
    for entry in dataset.table_entries():
        tau = entry.tau()
        assert tau.degree == 16
        assert entry.expected_aut_order % 3 == 0
        assert entry.expected_aut_order in (3, 6, 12, 24, 48)


def test_base_code_parameters():
    code = dataset.gb_code()
    assert code.n == 16
    assert code.k == 8
    assert code.is_self_dual()
    assert code.min_distance() == 4
    we = code.weight_enumerator()
    # singly-even: some weight is 2 mod 4
    assert any(we[w] for w in range(2, 17, 4) if w % 4 == 2)


def test_base_generators_preserve_code():
    code = dataset.gb_code()
    for g in dataset.autb_generators():
        assert code.permuted(g.img) == code


def test_x_matrices_shape():
    for i in range(1, 5):
        x = dataset.x_matrix(i)
        assert len(x) == 8 and all(len(row) == 8 for row in x)
        gen = dataset.x_generator(i)
        assert len(gen) == 8 and all(len(row) == 16 for row in gen)
