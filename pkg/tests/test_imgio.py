import os

import numpy as np
import pytest
from hypothesis import given
from hypothesis.extra import numpy as hnp

from grayfilt import (
    FormatError,
    Image,
    Kernel,
    load_pgm,
    parse_kernel,
    parse_lut,
    read_pgm,
    save_pgm,
    write_pgm,
)

pixel_arrays = hnp.arrays(
    np.uint8, hnp.array_shapes(min_dims=2, max_dims=2, min_side=1, max_side=16))


class TestReadPgm:
    def test_p5_example(self):
        data = b"P5\n2 2\n255\n" + bytes([0, 64, 128, 255])
        img = read_pgm(data)
        assert img.pixels.tolist() == [[0, 64], [128, 255]]

    def test_p2_example(self):
        img = read_pgm(b"P2\n1 1\n255\n7\n")
        assert img.pixels.tolist() == [[7]]

    def test_p5_truncated(self):
        data = b"P5\n2 2\n255\n" + bytes([0, 64, 128])
        with pytest.raises(FormatError, match="truncated"):
            read_pgm(data)

    def test_p2_truncated(self):
        with pytest.raises(FormatError, match="truncated"):
            read_pgm(b"P2\n2 2\n255\n1 2 3\n")

    def test_comments_between_header_tokens(self):
        data = b"P5\n# scanner output\n2 1 # inline\n255\n" + bytes([5, 6])
        assert read_pgm(data).pixels.tolist() == [[5, 6]]

    def test_bad_magic(self):
        with pytest.raises(FormatError, match="magic"):
            read_pgm(b"P3\n1 1\n255\n0 0 0\n")

    def test_wrong_maxval_rejected(self):
        with pytest.raises(FormatError, match="maxval"):
            read_pgm(b"P2\n1 1\n127\n7\n")

    def test_zero_dimension_rejected(self):
        with pytest.raises(FormatError, match=">= 1"):
            read_pgm(b"P2\n0 2\n255\n")

    def test_p2_pixel_above_maxval(self):
        with pytest.raises(FormatError, match="out of"):
            read_pgm(b"P2\n1 1\n255\n256\n")

    def test_p2_negative_pixel(self):
        with pytest.raises(FormatError, match="out of"):
            read_pgm(b"P2\n1 1\n255\n-3\n")

    def test_p2_non_numeric_pixel(self):
        with pytest.raises(FormatError, match="non-numeric"):
            read_pgm(b"P2\n1 1\n255\nseven\n")

    def test_errors_carry_byte_offsets(self):
        with pytest.raises(FormatError, match="byte"):
            read_pgm(b"P2\n1 x\n255\n0\n")

    def test_p2_tolerates_trailing_whitespace(self):
        assert read_pgm(b"P2\n1 1\n255\n7\n\n  \n").pixels.tolist() == [[7]]


class TestWritePgm:
    def test_canonical_p2_layout(self):
        img = Image([[0, 100, 255], [10, 128, 200]])
        assert write_pgm(img, "P2") == b"P2\n3 2\n255\n0 100 255\n10 128 200\n"

    def test_canonical_p5_layout(self):
        img = Image([[0, 64], [128, 255]])
        assert write_pgm(img, "P5") == b"P5\n2 2\n255\n" + bytes([0, 64, 128, 255])

    def test_unknown_format_rejected(self):
        with pytest.raises(ValueError):
            write_pgm(Image([[0]]), "P7")

    @given(pixel_arrays)
    def test_round_trip_p5(self, pixels):
        img = Image(pixels)
        assert read_pgm(write_pgm(img, "P5")) == img

    @given(pixel_arrays)
    def test_round_trip_p2(self, pixels):
        img = Image(pixels)
        assert read_pgm(write_pgm(img, "P2")) == img

    @given(pixel_arrays)
    def test_rewrite_after_read_is_byte_identical(self, pixels):
        img = Image(pixels)
        for fmt in ("P2", "P5"):
            data = write_pgm(img, fmt)
            assert write_pgm(read_pgm(data), fmt) == data

    @given(pixel_arrays)
    def test_both_formats_read_back_equal(self, pixels):
        img = Image(pixels)
        assert read_pgm(write_pgm(img, "P2")) == read_pgm(write_pgm(img, "P5"))

    def test_write_is_deterministic(self):
        a = Image([[1, 2], [3, 4]])
        b = Image(np.array([[1, 2], [3, 4]], dtype=np.int64))
        assert write_pgm(a, "P5") == write_pgm(b, "P5")


class TestFileHelpers:
    def test_save_and_load(self, tmp_path):
        img = Image([[9, 0], [255, 17]])
        path = tmp_path / "out.pgm"
        save_pgm(path, img, "P5")
        assert load_pgm(path) == img

    def test_load_text_rejects_binary(self, tmp_path):
        from grayfilt.imgio import load_text
        path = tmp_path / "junk.bin"
        path.write_bytes(bytes([0xFF, 0xFE, 0x00, 0x81]))
        with pytest.raises(FormatError, match="not a text file"):
            load_text(path)

    def test_atomic_save_leaves_no_temp_files(self, tmp_path):
        save_pgm(tmp_path / "a.pgm", Image([[1]]))
        assert sorted(os.listdir(tmp_path)) == ["a.pgm"]

    def test_load_missing_file_raises_oserror(self, tmp_path):
        with pytest.raises(OSError):
            load_pgm(tmp_path / "missing.pgm")


class TestParseKernel:
    def test_four_neighbor_laplacian(self):
        text = "3 3\n0 1 0\n1 -4 1\n0 1 0\n"
        assert parse_kernel(text) == Kernel([[0, 1, 0], [1, -4, 1], [0, 1, 0]])

    def test_identity_kernel(self):
        assert parse_kernel("1 1\n1\n") == Kernel([[1.0]])

    def test_real_coefficients(self):
        k = parse_kernel("1 3\n0.25 -0.5 2e-1\n")
        assert k.coeffs.tolist() == [[0.25, -0.5, 0.2]]

    def test_even_dimensions_rejected(self):
        with pytest.raises(FormatError, match="odd"):
            parse_kernel("2 2\n1 0\n0 1\n")

    def test_wrong_row_width_names_line(self):
        with pytest.raises(FormatError, match="line 3"):
            parse_kernel("3 3\n0 1 0\n1 -4\n0 1 0\n")

    def test_non_numeric_names_line(self):
        with pytest.raises(FormatError, match="line 2"):
            parse_kernel("1 1\nx\n")

    def test_missing_rows_rejected(self):
        with pytest.raises(FormatError, match="rows"):
            parse_kernel("3 3\n0 1 0\n")

    def test_extra_rows_rejected(self):
        with pytest.raises(FormatError, match="line 3"):
            parse_kernel("1 1\n1\n2\n")

    def test_all_zero_kernel_rejected(self):
        with pytest.raises(FormatError, match="nonzero"):
            parse_kernel("1 3\n0 0 0\n")

    def test_blank_lines_tolerated(self):
        assert parse_kernel("1 1\n\n1\n\n") == Kernel([[1.0]])


class TestParseLut:
    def test_valid_table(self):
        table = parse_lut(" ".join(str(255 - i) for i in range(256)))
        assert table.tolist() == [255 - i for i in range(256)]

    def test_wrong_entry_count(self):
        with pytest.raises(FormatError, match="256"):
            parse_lut("1 2 3")

    def test_non_numeric_entry(self):
        with pytest.raises(FormatError, match="non-numeric"):
            parse_lut(" ".join(["1"] * 255 + ["x"]))

    def test_out_of_range_entry(self):
        with pytest.raises(FormatError, match="must lie"):
            parse_lut(" ".join(["256"] * 256))
