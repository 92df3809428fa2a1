#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace peterson;

TEST(ParseTest, Words) {
    EXPECT_EQ(parse_word("1,3,4"), (Word{1, 3, 4}));
    EXPECT_EQ(parse_word(" 2 , 1 "), (Word{2, 1}));
    EXPECT_EQ(parse_word(""), Word{});
    EXPECT_EQ(parse_word("7,6\n"), (Word{7, 6}));
    for (const char* bad : {"1,,2", "a", "1,2,", "0", "-1", "1;2", "1.5", ","})
        EXPECT_THROW(parse_word(bad), std::invalid_argument) << bad;
}

TEST(ParseTest, Subsets) {
    EXPECT_EQ(parse_subset("all", 4), Subset::full(4));
    EXPECT_EQ(parse_subset("3,1", 4), Subset::of({1, 3}));
    EXPECT_EQ(parse_subset("", 4), Subset{});
    EXPECT_THROW(parse_subset("5", 4), std::invalid_argument);
    EXPECT_THROW(parse_subset("1,1", 4), std::invalid_argument);
    EXPECT_THROW(parse_subset("x", 4), std::invalid_argument);
    EXPECT_EQ(parse_output_format("csv"), OutputFormat::csv);
    EXPECT_THROW(parse_output_format("xml"), std::invalid_argument);
}

TEST(TemplateWordsTest, ClassicalTemplatesAreReducedLongestWords) {
    for (LieType t : oracle::types_up_to_rank(8)) {
        if (t.family > Family::D) continue;
        const RootSystem rs(t);
        const Word w = bundled_longest_word(t, default_data_dir());
        EXPECT_TRUE(is_reduced(rs, w)) << t.name();
        EXPECT_EQ(element_of(rs, w), longest_element(rs, Subset::full(t.rank))) << t.name();
    }
    EXPECT_EQ(template_word_bc(3), (Word{3, 2, 3, 1, 2, 3, 1, 2, 1}));
    EXPECT_EQ(template_word_d(5), (Word{4, 3, 5, 2, 3, 4, 1, 2, 3, 5, 1, 2, 3, 4, 1, 2, 3, 1, 2, 1}));
    EXPECT_EQ(template_word_a(3), (Word{1, 2, 3, 1, 2, 1}));
}

TEST(TemplateWordsTest, BundledExceptionalWords) {
    const std::map<std::string, std::size_t> sizes{{"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6}};
    for (const auto& [name, n] : sizes) {
        const LieType t = parse_lie_type(name);
        const RootSystem rs(t);
        const Word w = bundled_longest_word(t, default_data_dir());
        EXPECT_EQ(w.size(), n);
        EXPECT_TRUE(is_reduced(rs, w));
        EXPECT_EQ(element_of(rs, w), longest_element(rs, Subset::full(t.rank)));
    }
    EXPECT_THROW(bundled_longest_word(parse_lie_type("E6"), "/nonexistent"), std::runtime_error);
}

TEST(JsonTest, SchemasAndDeterminism) {
    EXPECT_EQ(to_json(TMonomial{Rational(5, 2), 1}).dump(), R"({"deg":1,"den":"2","num":"5"})");
    EXPECT_EQ(to_json(TMonomial::zero(3)).dump(), R"({"deg":0,"den":"1","num":"0"})");
    const BasisTable a1 = basis_table(parse_lie_type("A1"));
    EXPECT_EQ(to_json(a1).dump(),
              R"({"classes":[[],[1]],"fixed_points":[[],[1]],"matrix":[[{"deg":0,"den":"1","num":"1"},)"
              R"({"deg":0,"den":"1","num":"0"}],[{"deg":0,"den":"1","num":"1"},{"deg":1,"den":"1","num":"1"}]],)"
              R"("type":"A1"})");
    const auto sys = std::make_shared<const PetersonSystem>(parse_lie_type("D5"));
    const MonkExpansion m = monk(*sys, 5, Subset::of({1, 2, 3, 4}));
    EXPECT_EQ(to_json(m).dump(),
              R"({"K":[1,2,3,4],"diagonal":{"deg":0,"den":"1","num":"0"},"i":5,)"
              R"("terms":[{"J":[1,2,3,4,5],"coeff":{"den":"2","num":"5"}}]})");
    const RootSystem b3(parse_lie_type("B3"));
    EXPECT_EQ(to_json(heights_list(b3, {3, 2, 3})).dump(), R"({"heights":[1,3,2],"word":[3,2,3]})");
    const std::string once = render(basis_table(parse_lie_type("B3"), 1), OutputFormat::json);
    EXPECT_EQ(once, render(basis_table(parse_lie_type("B3"), 3), OutputFormat::json));
}

TEST(RenderTest, TableAndCsv) {
    const BasisTable a1 = basis_table(parse_lie_type("A1"));
    EXPECT_EQ(render(a1, OutputFormat::csv), "K,p{},p{1}\n{},1,0\n{1},1,t\n");
    EXPECT_EQ(render(a1, OutputFormat::table), "K    p{}  p{1}\n{}   1    0\n{1}  1    t\n");
    const auto sys = std::make_shared<const PetersonSystem>(parse_lie_type("A1"));
    const std::string m = render(monk(*sys, 1, Subset::single(1)), OutputFormat::table);
    EXPECT_NE(m.find("no superset terms"), std::string::npos);
    EXPECT_EQ(render(monk(*sys, 1, Subset::single(1)), OutputFormat::csv), "i,K,J,coeff\n1,{1},{1},t\n");
    const std::string g = render({giambelli(*sys, Subset::single(1))}, OutputFormat::csv);
    EXPECT_EQ(g, "K,C,components,reduced_words\n{1},1,A1,1\n");
    EXPECT_EQ(detail::csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(detail::csv_field("say \"x\""), "\"say \"\"x\"\"\"");
}
