#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "aradon/csv.hpp"
#include "aradon/pgm.hpp"
#include "test_support.hpp"

namespace aradon {
namespace {

PgmErrorKind error_kind(std::string_view bytes, PgmReadOptions opts = {}) {
  try {
    read_pgm(bytes, opts);
  } catch (const PgmError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return PgmErrorKind::BadHeader;
}

TEST(ReadPgm, AsciiWithComments) {
  EXPECT_EQ(read_pgm("P2\n2 2\n255\n1 2 3 4"), Image::from_rows({{1, 2}, {3, 4}}));
  EXPECT_EQ(read_pgm("P2 # magic\n# size follows\n2 2 # w h\n7\n0 7\n# mid\n3 4\n"),
            Image::from_rows({{0, 7}, {3, 4}}));
}

TEST(ReadPgm, Binary) {
  std::string bytes = "P5\n3 3\n255\n";
  for (int v : {1, 2, 3, 4, 5, 6, 7, 8, 200}) bytes.push_back(static_cast<char>(v));
  const Image img = read_pgm(bytes);
  EXPECT_EQ(img(2, 2), 200);
  EXPECT_EQ(img(0, 1), 2);
}

TEST(ReadPgm, Errors) {
  EXPECT_EQ(error_kind("P6\n2 2\n255\n"), PgmErrorKind::BadMagic);
  EXPECT_EQ(error_kind("hello"), PgmErrorKind::BadMagic);
  EXPECT_EQ(error_kind("P5\n2 2\n65535\n\0\0\0\0\0\0\0\0"), PgmErrorKind::UnsupportedMaxval);
  EXPECT_EQ(error_kind("P5\n2 2\n255\n\x01\x02"), PgmErrorKind::Truncated);
  EXPECT_EQ(error_kind("P2\n2 2\n255\n1 2 3"), PgmErrorKind::Truncated);
  EXPECT_EQ(error_kind("P2\n2"), PgmErrorKind::Truncated);
  EXPECT_EQ(error_kind("P2\n1 1\n255\n1"), PgmErrorKind::BadDimension);
  EXPECT_EQ(error_kind("P2\n3 1\n255\n1 2 3"), PgmErrorKind::BadDimension);
  EXPECT_EQ(error_kind("P2\n2 2\n10\n1 2 3 11"), PgmErrorKind::BadSample);
  EXPECT_EQ(error_kind("P2\n2 x\n255\n"), PgmErrorKind::BadHeader);
  EXPECT_EQ(error_kind("P2\n3 2\n255\n1 2 3 4 5 6"), PgmErrorKind::NotSquare);
}

TEST(ReadPgm, PadToSquare) {
  const Image img = read_pgm("P2\n3 2\n255\n1 2 3 4 5 6", {.pad_to_square = true});
  EXPECT_EQ(img, Image::from_rows({{1, 2, 3}, {4, 5, 6}, {0, 0, 0}}));
  const Image tall = read_pgm("P2\n2 3\n255\n1 2 3 4 5 6", {.pad_to_square = true});
  EXPECT_EQ(tall, Image::from_rows({{1, 2, 0}, {3, 4, 0}, {5, 6, 0}}));
}

TEST(PgmRoundTrip, RandomImages) {
  std::mt19937 rng(100);
  std::uniform_int_distribution<std::size_t> side(2, 40);
  for (int i = 0; i < 100; ++i) {
    const Image img = testing::random_image(side(rng), rng);
    const std::string bytes = write_pgm(img);
    ASSERT_TRUE(bytes.starts_with("P5\n"));
    ASSERT_EQ(read_pgm(bytes), img);
  }
}

TEST(RenderPgm, Normalization) {
  const std::string flat = render_pgm(std::vector<double>(6, 42.0), 3, 2);
  EXPECT_EQ(flat, std::string("P5\n3 2\n255\n") + std::string(6, '\0'));
  const std::string r = render_pgm({5.0, 10.0, 15.0, 7.5}, 2, 2);
  const std::string raster = r.substr(r.size() - 4);
  EXPECT_EQ(static_cast<unsigned char>(raster[0]), 0);
  EXPECT_EQ(static_cast<unsigned char>(raster[2]), 255);
  EXPECT_EQ(static_cast<unsigned char>(raster[1]), 128);
}

TEST(FormatReal, Digits) {
  EXPECT_EQ(format_real(0.0), "0.0");
  EXPECT_EQ(format_real(1.0), "1.0");
  EXPECT_EQ(format_real(0.5), "0.5");
  EXPECT_EQ(format_real(26.565051177077986), "26.5650512");
  EXPECT_EQ(format_real(1e-12), "1e-12");
}

TEST(SinogramCsv, OctantLayout) {
  const auto oct = approx_octant(testing::sample_3x3(), Octant::Deg0to45);
  const std::string csv = write_sinogram_csv(oct);
  EXPECT_EQ(csv,
            "k,slope,angle_deg,b0,b1,b2,b3,b4\n"
            "0,0.0,0.0,12,15,18,0,0\n"
            "1,0.5,26.5650512,1,13,16,15,0\n"
            "2,1.0,45.0,1,6,15,14,9\n");
}

TEST(SinogramCsv, OctantRoundTrip) {
  std::mt19937 rng(200);
  std::uniform_int_distribution<std::size_t> side(2, 24);
  for (int i = 0; i < 100; ++i) {
    const Image img = testing::random_image(side(rng), rng);
    const Octant o = kAllOctants[static_cast<std::size_t>(i) % 4];
    const auto oct = approx_octant(img, o);
    const auto back = parse_octant_csv(write_sinogram_csv(oct), o);
    ASSERT_EQ(back.rows, oct.rows);
    ASSERT_EQ(back.n, oct.n);
    ASSERT_EQ(back.slopes.size(), oct.slopes.size());
    for (std::size_t k = 0; k < oct.slopes.size(); ++k) ASSERT_NEAR(back.slopes[k], oct.slopes[k], 1e-8);
  }
}

TEST(SinogramCsv, ParseErrors) {
  EXPECT_THROW(parse_octant_csv("angle_deg,r0\n"), CsvError);
  EXPECT_THROW(parse_octant_csv("k,slope,angle_deg,b0,b1,b2\n0,0.0,0.0,1,2\n"), CsvError);
  EXPECT_THROW(parse_octant_csv("k,slope,angle_deg,b0,b1,b2\n0,0.0,0.0,1,x,3\n1,1.0,45.0,1,2,3\n"), CsvError);
}

TEST(SinogramCsv, ExactLayout) {
  ExactSinogram ex;
  ex.angles_deg = {0.0, 90.0};
  ex.rho_centers = {-1, 0, 1};
  ex.values = {{0.25, 1.0, 0.0}, {1.0 / 3.0, 2.0, 0.5}};
  EXPECT_EQ(write_sinogram_csv(ex),
            "angle_deg,r0,r1,r2\n"
            "0.0,0.25,1.0,0.0\n"
            "90.0,0.333333333,2.0,0.5\n");
}

TEST(TraceCsv, ThreeByThree) {
  const auto sim = sim_run(testing::sample_3x3());
  const std::string csv = write_trace_csv(sim.trace);
  EXPECT_EQ(csv,
            "cycle,stage,row,shift_bit\n"
            "2,1,0,0\n"
            "3,1,1,1\n"
            "3,2,0,0\n"
            "4,1,2,1\n"
            "4,2,1,0\n"
            "5,2,2,1\n");
  const Trace back = parse_trace_csv(csv);
  EXPECT_EQ(back, sim.trace);
  for (const auto& e : back) {
    EXPECT_EQ(e.shift_bit, line_eq_calc(e.stage, e.row, 3));
    if (e.row == 0) EXPECT_EQ(e.shift_bit, 0);
  }
}

TEST(Files, AtomicWriteReplaces) {
  const auto dir = std::filesystem::temp_directory_path() / "aradon_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.txt";
  write_file_atomic(path, "first");
  write_file_atomic(path, "second");
  EXPECT_EQ(read_file(path), "second");
  EXPECT_FALSE(std::filesystem::exists(dir / "out.txt.tmp"));
  EXPECT_THROW(read_file(dir / "missing.txt"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace aradon
