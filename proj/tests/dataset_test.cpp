#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>

#include "mcdm/dataset.hpp"
#include "mcdm/replication.hpp"

namespace mcdm {
namespace {

const std::string kDataDir = MCDM_DATA_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

MatrixDocument load(const std::string& text) {
  std::istringstream in(text);
  return load_matrix_csv(in, "test");
}

std::string error_of(const std::string& text) {
  try {
    (void)load(text);
  } catch (const DataError& e) {
    return e.what();
  }
  return {};
}

TEST(Builtin, BankRows) {
  const auto& doc = builtin_bank_dataset();
  EXPECT_EQ(doc.source, "builtin:banks");
  const auto& m = doc.matrix;
  ASSERT_EQ(m.rows(), 30u);
  ASSERT_EQ(m.cols(), 6u);
  EXPECT_EQ(m.alternatives().front(), "ABB");
  EXPECT_EQ(m.alternatives().back(), "VIETBANK");
  EXPECT_EQ(m.values()[0], (std::vector<double>{13, 14, 15, 11, 16, 22}));
  EXPECT_EQ(m.alternatives()[22], "TCB");
  EXPECT_EQ(m.values()[22], (std::vector<double>{2, 16, 4, 3, 9, 11}));
  EXPECT_EQ(m.criteria()[5].name, "C6");
}

TEST(Builtin, BankColumnMultisets) {
  const auto& m = builtin_bank_dataset().matrix;
  auto c1 = m.column(0);
  std::sort(c1.begin(), c1.end());
  for (int k = 0; k < 30; ++k) EXPECT_EQ(c1[k], k + 1);
  const auto c2 = m.column(1);
  EXPECT_EQ(std::count(c2.begin(), c2.end(), 4.0), 4);
  for (std::size_t j = 1; j < 6; ++j) {
    auto col = m.column(j);
    std::sort(col.begin(), col.end());
    EXPECT_NE(std::adjacent_find(col.begin(), col.end()), col.end()) << "C" << j + 1;
  }
}

TEST(Builtin, CamelsReference) {
  const auto& ref = builtin_camels_reference();
  EXPECT_EQ(ref.label, "CAMELS");
  EXPECT_EQ(ref.names, builtin_bank_dataset().matrix.alternatives());
  auto rank_of = [&](const std::string& name) {
    const auto it = std::find(ref.names.begin(), ref.names.end(), name);
    return ref.ranks[static_cast<std::size_t>(it - ref.names.begin())];
  };
  EXPECT_EQ(rank_of("TCB"), 1);
  EXPECT_EQ(rank_of("MBB"), 2);
  EXPECT_EQ(rank_of("HDB"), 3);
  EXPECT_EQ(rank_of("NCB"), 30);
  EXPECT_EQ(rank_of("SCB"), 29);
  EXPECT_EQ(rank_of("PVCOMBANK"), 28);
  EXPECT_EQ(rank_of("OCB"), 4);
  EXPECT_EQ(rank_of("TPBANK"), 4);
  EXPECT_EQ(rank_of("VIB"), 4);
  EXPECT_EQ(rank_of("VCB"), 7);
  EXPECT_EQ(published_results().alternatives, ref.names);
}

TEST(ShippedCsv, BankFileEqualsBuiltin) {
  const auto doc = load_matrix_file(kDataDir + "/banks.csv");
  EXPECT_EQ(doc.matrix, builtin_bank_dataset().matrix);

  std::ostringstream out;
  write_matrix_csv(out, builtin_bank_dataset().matrix);
  EXPECT_EQ(fnv1a(out.str()), fnv1a(slurp(kDataDir + "/banks.csv")));
}

TEST(ShippedCsv, CamelsFileEqualsBuiltin) {
  const auto ref = load_reference_file(kDataDir + "/camels.csv");
  EXPECT_EQ(ref.names, builtin_camels_reference().names);
  EXPECT_EQ(ref.ranks, builtin_camels_reference().ranks);

  std::ostringstream out;
  write_reference_csv(out, builtin_camels_reference());
  EXPECT_EQ(fnv1a(out.str()), fnv1a(slurp(kDataDir + "/camels.csv")));
}

TEST(ShippedCsv, PublishedRankFilesEqualBuiltin) {
  const auto& pub = published_results();
  for (Method method : kAllMethods) {
    std::string name(to_string(method));
    std::transform(name.begin(), name.end(), name.begin(), ::tolower);
    const auto ref = load_reference_file(kDataDir + "/published_" + name + "_ranks.csv");
    EXPECT_EQ(ref.names, pub.alternatives);
    EXPECT_EQ(ref.ranks, pub.column(method).ranks) << name;
  }
}

TEST(MatrixCsv, CrlfWhitespaceAndTrailingBlankLines) {
  const auto doc = load(" alternative , X ,Y\r\n a , 1.5 , -2\r\nb,3,4\r\n\r\n\n");
  const auto& m = doc.matrix;
  EXPECT_EQ(m.alternatives(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(m.criteria()[0].name, "X");
  EXPECT_EQ(m.values(), (std::vector<std::vector<double>>{{1.5, -2}, {3, 4}}));
  EXPECT_EQ(m.criteria()[0].direction, Direction::Cost);
  EXPECT_DOUBLE_EQ(m.criteria()[1].weight, 0.5);
}

TEST(MatrixCsv, Errors) {
  EXPECT_NE(error_of("alternative,C1\n").find("empty body"), std::string::npos);
  EXPECT_NE(error_of("alternative,C1\na,1\nb,abc\n").find("'abc' at test line 3, column 2"),
            std::string::npos);
  EXPECT_NE(error_of("alternative,C1,C2\na,1,2\nb,3\n").find("ragged"), std::string::npos);
  EXPECT_NE(error_of("alternative,C1\na,1\na,2\n").find("duplicate alternative"),
            std::string::npos);
  EXPECT_NE(error_of("").find("empty input"), std::string::npos);
  EXPECT_NE(error_of("alternative,C1\na,1\n").find("m >= 2"), std::string::npos);
}

TEST(MatrixCsv, NumberGrammarIsStrict) {
  for (const char* bad : {"1e3", "1,000", "+1", ".5", "5.", "1.2.3", "0x10", "nan", "inf", ""}) {
    EXPECT_THROW((void)parse_number(bad, "cell"), DataError) << bad;
  }
  EXPECT_EQ(parse_number("-12.25", "cell"), -12.25);
  EXPECT_EQ(parse_number("007", "cell"), 7.0);
}

TEST(MatrixCsv, RoundTripOfBuiltin) {
  std::ostringstream out;
  write_matrix_csv(out, builtin_bank_dataset().matrix);
  std::istringstream in(out.str());
  EXPECT_EQ(load_matrix_csv(in).matrix, builtin_bank_dataset().matrix);
}

TEST(ReferenceCsv, Errors) {
  auto ref_error = [](const std::string& text) -> std::string {
    std::istringstream in(text);
    try {
      (void)load_reference_csv(in);
    } catch (const DataError& e) {
      return e.what();
    }
    return {};
  };
  EXPECT_NE(ref_error("alternative,rank\na,0\nb,1\n").find("< 1"), std::string::npos);
  EXPECT_NE(ref_error("alternative,rank\na,1\na,2\n").find("duplicate"), std::string::npos);
  EXPECT_NE(ref_error("alternative,rank\na,x\n").find("non-numeric"), std::string::npos);
  EXPECT_NE(ref_error("alternative,rank\n").find("empty body"), std::string::npos);
}

TEST(ReferenceCsv, SingleRowLoadsButCannotBeCompared) {
  std::istringstream in("alternative,rank\nonly,1\n");
  const auto ref = load_reference_csv(in);
  EXPECT_EQ(ref.names.size(), 1u);
}

}  // namespace
}  // namespace mcdm
