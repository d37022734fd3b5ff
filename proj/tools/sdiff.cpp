// sdiff: differentiate framed simplicial presentations, compare van Est cohomology, and run abstract differentiation.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "sdiff/acceptance.hpp"
#include "sdiff/io.hpp"

using namespace sdiff;
using io::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_math = 2;

void emit(json const &report, std::string const &out)
{
	std::string text = io::dump(report);
	if (out.empty() || out == "-")
	{
		std::cout << text;
		return;
	}
	std::ofstream f(out, std::ios::binary);
	if (!f)
		throw InvalidArgument(out + ": cannot write report");
	f << text;
}

/// Rebuilds or truncates the presentation at the requested truncation.
FramedPresentation with_truncation(io::InputFile const &in, int truncation)
{
	FramedPresentation p = *in.presentation;
	if (truncation <= 0 || truncation == p.truncation)
		return p;
	if (in.law)
	{
		auto q = oracles::nerve_from_group_law(*in.law, truncation, p.max_level);
		q.name = p.name;
		return q;
	}
	if (truncation > p.truncation)
		throw InvalidArgument("truncation insufficient: framed input keeps weight " + std::to_string(p.truncation) +
		                      " and cannot be raised to " + std::to_string(truncation));
	p.truncation = truncation;
	for (auto &level : p.d0)
		for (auto &[g, img] : level)
			img = img.truncated(truncation);
	return p;
}

io::InputFile load_presentation(std::string const &path)
{
	auto in = io::load_input(path);
	if (!in.presentation)
		throw InvalidArgument(path + ": expected a framed or group_law presentation, found kind \"" + in.kind + "\"");
	return in;
}

int cmd_differentiate(std::string const &path, int degree, int truncation, std::string const &out)
{
	auto in = load_presentation(path);
	FramedPresentation p = with_truncation(in, truncation);
	if (degree <= 0)
		degree = std::max(1, acceptance::supported_degree(p, 3));
	CochainEngine probe(p);
	require_ce_data(probe, degree);

	json report = io::report_header("differentiate", p.name);
	report["conventions"] = io::conventions_json(p.truncation, degree);
	CheckReport checks = validate_presentation(p);
	if (!checks.passed())
	{
		report["checks"] = io::checks_json(checks);
		report["passed"] = false;
		emit(report, out);
		return exit_math;
	}
	CochainEngine eng(p);
	auto direct = compute_ce(eng, degree, CEPath::direct);
	CEAlgebra via;
	std::string via_error;
	try
	{
		via = compute_ce(eng, degree, CEPath::via_delta);
	}
	catch (IdentityViolation const &e)
	{
		via_error = e.what();
	}
	for (auto const &g : direct.generators(degree))
	{
		bool same = via_error.empty() && direct.differential.at(g) == via.differential.at(g);
		checks.add("paths agree on d" + to_string(g), same,
		           same ? "" : via_error.empty() ? "direct " + to_string(direct.differential.at(g)) + " vs delta " + to_string(via.differential.at(g)) : via_error);
	}
	for (auto const &c : check_d_squared(direct, degree).checks)
		checks.checks.push_back(c);
	report["generators"] = io::generators_json(direct);
	report["differential"] = io::differential_json(direct);
	report["bracket_tables"] = io::bracket_tables_json(direct);
	report["checks"] = io::checks_json(checks);
	report["passed"] = checks.passed();
	emit(report, out);
	return checks.passed() ? exit_ok : exit_math;
}

int cmd_vanest(std::string const &path, int max_degree, int max_weight, int truncation, std::string const &out)
{
	auto in = load_presentation(path);
	FramedPresentation p = with_truncation(in, truncation);
	VanEstTable table;
	try
	{
		table = vanest_compare(p, max_degree, max_weight);
	}
	catch (NonlinearFace const &e)
	{
		throw InvalidArgument(e.what());
	}
	json report = io::report_header("vanest", p.name);
	report["conventions"] = io::conventions_json(p.truncation, max_degree);
	report["max_weight"] = max_weight;
	report["table"] = io::vanest_json(table);
	bool iso = table.all_isomorphisms(max_degree);
	CheckReport checks = table.checks;
	checks.add("van Est map is an isomorphism through degree " + std::to_string(max_degree), iso);
	report["checks"] = io::checks_json(checks);
	report["passed"] = checks.passed();
	emit(report, out);
	return checks.passed() ? exit_ok : exit_math;
}

json odd_line_table(FiniteCosimplicialAlgebra const &x)
{
	json rows = json::array();
	for (int n = 0; n <= x.cap(); ++n)
	{
		json r;
		r["level"] = n;
		r["delta"] = io::to_json(odd_line_delta(x, n));
		r["pi"] = io::to_json(odd_line_pi(x, n));
		rows.push_back(r);
	}
	return rows;
}

int cmd_abstract(std::string const &path, std::string const &out)
{
	auto in = io::load_input(path);
	if (!in.algebra)
		throw InvalidArgument(path + ": expected a cosimplicial algebra, found kind \"" + in.kind + "\"");
	auto const &x = *in.algebra;
	CheckReport checks = validate_cosimplicial_algebra(x);
	if (!checks.passed())
		throw InvalidArgument(path + ": " + checks.first_failure()->name + ": " + checks.first_failure()->detail);
	json report = io::report_header("abstract", x.name);
	json conv;
	conv["level_cap"] = x.cap();
	conv["rationals"] = "p/q strings";
	conv["basis"] = "normalized coordinates; quotient representatives are standard basis vectors of the normalization";
	report["conventions"] = conv;
	auto inf = is_infinitesimal(x);
	json ij;
	ij["infinitesimal"] = inf.infinitesimal;
	if (!inf.infinitesimal)
	{
		ij["level"] = inf.level;
		ij["witness"] = inf.witness;
		ij["left"] = io::to_json(inf.left);
		ij["right"] = io::to_json(inf.right);
		ij["product"] = io::to_json(inf.product);
	}
	report["infinitesimality"] = ij;
	auto ad = abstract_diff(x);
	report["normalized_dims"] = ad.normalized_dims;
	report["ideal_dims"] = ad.ideal_dims;
	report["algebra"] = io::dga_json(ad.algebra);
	bool zero_ideal = std::all_of(ad.ideal_dims.begin(), ad.ideal_dims.end(), [](std::size_t d) { return d == 0; });
	checks.add("ideal vanishes exactly when infinitesimal", zero_ideal == inf.infinitesimal);
	for (auto const &c : validate_dga(ad.algebra).checks)
		checks.add("differentiated algebra: " + c.name, c.passed, c.detail);
	if (in.model == "odd_line")
	{
		report["odd_line"] = odd_line_table(x);
		for (auto const &c : odd_line_checks(x).checks)
			checks.checks.push_back(c);
	}
	if (in.dga)
		for (auto const &c : counit_check(*in.dga).checks)
			checks.add("counit: " + c.name, c.passed, c.detail);
	report["checks"] = io::checks_json(checks);
	report["passed"] = checks.passed();
	emit(report, out);
	return checks.passed() ? exit_ok : exit_math;
}

int cmd_validate(std::string const &path, std::string const &out)
{
	auto in = io::load_input(path);
	json report = io::report_header("validate", in.name);
	report["kind"] = in.kind;
	CheckReport checks;
	if (in.presentation)
	{
		checks = validate_presentation(*in.presentation);
		report["conventions"] = io::conventions_json(in.presentation->truncation, 0);
	}
	else
	{
		checks = validate_cosimplicial_algebra(*in.algebra);
		if (in.dga)
			for (auto const &c : validate_dga(*in.dga).checks)
				checks.add("dga: " + c.name, c.passed, c.detail);
	}
	report["checks"] = io::checks_json(checks);
	report["passed"] = checks.passed();
	emit(report, out);
	return checks.passed() ? exit_ok : exit_math;
}

int cmd_selftest(std::string const &filter, std::string const &fixtures)
{
	acceptance::Context ctx;
	try
	{
		ctx.fixtures = acceptance::load_fixtures(fixtures);
	}
	catch (Error const &e)
	{
		std::cerr << "selftest: " << e.what() << "\n";
		return exit_input;
	}
	bool all = true;
	std::size_t ran = 0;
	for (auto const &c : acceptance::criteria())
	{
		if (!acceptance::selected(c, filter))
			continue;
		auto v = acceptance::run_one(c, ctx);
		std::cout << acceptance::format_verdict(v) << std::endl;
		all = all && v.passed;
		++ran;
	}
	if (ran == 0)
	{
		std::cerr << "selftest: no criterion matches \"" << filter << "\"\n";
		return exit_input;
	}
	return all ? exit_ok : exit_math;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Differentiation of simplicial presentations into higher Lie algebroids"};
	app.require_subcommand(1);
	app.set_version_flag("--version", std::string("sdiff ") + io::tool_version);

	std::string input, out, filter, fixtures = SDIFF_FIXTURE_DIR;
	int degree = 0, truncation = 0, max_degree = 2, max_weight = 4;

	auto *diff = app.add_subcommand("differentiate", "compute the CE algebra through a degree");
	diff->add_option("input", input, "presentation JSON")->required();
	diff->add_option("--degree", degree, "highest CE degree (default: what the data supports, at most 3)");
	diff->add_option("--truncation", truncation, "override the truncation weight");
	diff->add_option("--out", out, "report path (default: stdout)");

	auto *ve = app.add_subcommand("vanest", "compare polynomial cochain and CE cohomology");
	ve->add_option("input", input, "presentation JSON")->required();
	ve->add_option("--max-degree", max_degree, "highest cohomological degree")->check(CLI::Range(0, 4));
	ve->add_option("--max-weight", max_weight, "highest factor count")->check(CLI::Range(0, 8));
	ve->add_option("--truncation", truncation, "override the truncation weight");
	ve->add_option("--out", out, "report path (default: stdout)");

	auto *ab = app.add_subcommand("abstract", "normalize and differentiate a cosimplicial algebra");
	ab->add_option("input", input, "cosimplicial JSON")->required();
	ab->add_option("--out", out, "report path (default: stdout)");

	auto *va = app.add_subcommand("validate", "check the structure identities of an input");
	va->add_option("input", input, "input JSON")->required();
	va->add_option("--out", out, "report path (default: stdout)");

	auto *st = app.add_subcommand("selftest", "run the acceptance criteria");
	st->add_option("--filter", filter, "run only criteria whose number, key or title matches");
	st->add_option("--fixtures", fixtures, "fixture directory");

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::CallForHelp const &e)
	{
		return app.exit(e);
	}
	catch (CLI::CallForVersion const &e)
	{
		return app.exit(e);
	}
	catch (CLI::ParseError const &e)
	{
		app.exit(e);
		return exit_input;
	}

	try
	{
		if (*diff)
			return cmd_differentiate(input, degree, truncation, out);
		if (*ve)
			return cmd_vanest(input, max_degree, max_weight, truncation, out);
		if (*ab)
			return cmd_abstract(input, out);
		if (*va)
			return cmd_validate(input, out);
		if (*st)
			return cmd_selftest(filter, fixtures);
	}
	catch (InvalidArgument const &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return exit_input;
	}
	catch (InsufficientTruncation const &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return exit_input;
	}
	catch (Error const &e)
	{
		std::cerr << "check failed: " << e.what() << "\n";
		return exit_math;
	}
	return exit_input;
}
