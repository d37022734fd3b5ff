#include <gtest/gtest.h>

#include "sdiff/io.hpp"
#include "sdiff/oracles/corpus.hpp"
#include "sdiff/oracles/dga_corpus.hpp"

using namespace sdiff;
using io::json;

namespace {

std::string message_of(std::string const &text)
{
	try
	{
		io::parse_input(text, "in.json");
	}
	catch (Error const &e)
	{
		return e.what();
	}
	return "";
}

} // namespace

TEST(Rationals, RoundTripAsStrings)
{
	for (std::string s : {"0", "-3", "7/4", "-1/2"})
		EXPECT_EQ(to_string(parse_rational(s)), s);
	EXPECT_EQ(io::to_json(parse_rational("6/4")), json("3/2"));
	EXPECT_EQ(io::to_json(parse_rational("-2/-4")), json("1/2"));
}

TEST(Framed, RoundTripPreservesEverything)
{
	auto p = oracles::nerve_from_group_law(oracles::affine_law(), 3, 3);
	p.name = "affine";
	auto text = io::dump(io::framed_json(p));
	auto in = io::parse_input(text, "affine.json");
	ASSERT_TRUE(in.presentation.has_value());
	EXPECT_EQ(io::dump(io::framed_json(*in.presentation)), text);
	EXPECT_TRUE(same_complex(in.presentation->tangent, p.tangent));
}

TEST(GroupLaw, RoundTripAndNerve)
{
	auto law = oracles::abelian_law(2);
	auto text = io::dump(io::group_law_json(law, 3, 3));
	auto in = io::parse_input(text, "law.json");
	ASSERT_TRUE(in.law.has_value());
	EXPECT_EQ(io::dump(io::group_law_json(*in.law, 3, 3)), text);
	EXPECT_EQ(in.presentation->truncation, 3);
}

TEST(Dga, RoundTripForCorpus)
{
	for (auto const &y : oracles::dga_corpus())
	{
		auto text = io::dump(io::dga_json(y));
		json j = io::parse_text(text, y.name);
		auto back = io::dga_from(io::Node(j, y.name));
		EXPECT_EQ(io::dump(io::dga_json(back)), text) << y.name;
	}
}

TEST(Diagnostics, SyntaxErrorsCarryLineAndColumn)
{
	auto msg = message_of("{\n  \"kind\": \"group_law\",,\n}");
	EXPECT_NE(msg.find("in.json:2:"), std::string::npos) << msg;
}

TEST(Diagnostics, FieldErrorsCarryJsonPointer)
{
	auto msg = message_of(R"({"kind": "group_law", "name": "x", "dim": 1, "truncation": 3, "max_level": 3,
		"structure_constants": [[["a"]]], "bch_order": 2})");
	EXPECT_NE(msg.find("/structure_constants/0/0/0"), std::string::npos) << msg;
	EXPECT_NE(message_of(R"({"kind": "nonsense"})").find("kind"), std::string::npos);
	EXPECT_NE(message_of(R"({"kind": "cosimplicial", "model": "odd_line", "name": "o", "level_cap": 9})").find("level_cap"),
	          std::string::npos);
}
