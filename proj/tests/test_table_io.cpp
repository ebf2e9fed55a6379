#include <aplcm/table_io.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace aplcm;

namespace {

PeriodTable read(const std::string& s) {
  std::istringstream is(s);
  return read_period_table(is);
}

std::string write(const PeriodTable& t) {
  std::ostringstream os;
  write_period_table(os, t);
  return os.str();
}

}  // namespace

TEST(TableIo, WritesDocumentedLayout) {
  const auto t = build_period_table(Progression(1, 0), 2);
  EXPECT_EQ(write(t), "aplcm-table v1 a=1 b=0 k=2 period=2\n2\n1\n");
}

TEST(TableIo, RoundTripIsByteExact) {
  for (std::uint64_t k = 0; k <= 9; ++k)
    for (std::uint64_t a : {1, 2, 3, 6, 10})
      for (std::uint64_t b : {0, 1, 4, 9}) {
        const auto t = build_period_table(Progression(a, b), k);
        const std::string text = write(t);
        const auto back = read(text);
        ASSERT_EQ(back, t);
        ASSERT_EQ(write(back), text);
      }
}

TEST(TableIo, FileRoundTrip) {
  const auto path = (std::filesystem::temp_directory_path() / "aplcm_table_io_test.txt").string();
  const auto t = build_period_table(Progression(3, 1), 7);
  save_period_table(path, t);
  EXPECT_EQ(load_period_table(path), t);
  std::filesystem::remove(path);
  EXPECT_THROW(load_period_table(path), FormatError);
}

TEST(TableIo, RejectsMalformedInput) {
  EXPECT_THROW(read(""), FormatError);
  EXPECT_THROW(read("aplcm-table v2 a=1 b=0 k=2 period=2\n2\n1\n"), FormatError);
  EXPECT_THROW(read("aplcm-table v1 a=1 b=0 k=2 period=2\n2\n"), FormatError);
  EXPECT_THROW(read("aplcm-table v1 a=1 b=0 k=2 period=2\n2\n1\n1\n"), FormatError);
  EXPECT_THROW(read("aplcm-table v1 a=1 b=0 k=2 period=2\n2\n1"), FormatError);
  EXPECT_THROW(read("aplcm-table v1 a=1 b=0 k=2 period=2\n2\nx\n"), FormatError);
  EXPECT_THROW(read("aplcm-table v1 a=1 b=0 k=2 period=2\n02\n1\n"), FormatError);
  EXPECT_THROW(read("aplcm-table v1 a=01 b=0 k=2 period=2\n2\n1\n"), FormatError);
  EXPECT_THROW(read("aplcm-table v1 a=0 b=0 k=2 period=1\n1\n"), FormatError);
  EXPECT_THROW(read("aplcm-table v1 a=1 b=0 k=2 period=0\n"), FormatError);
  EXPECT_THROW(read("aplcm-table v1 a=1 b=0 k=2 period=2\r\n2\n1\n"), FormatError);
}
