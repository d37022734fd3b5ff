// Runs every acceptance criterion and prints one line per criterion.
#include <iostream>

#include "sdiff/acceptance.hpp"

int main(int argc, char **argv)
{
	std::string dir = argc > 1 ? argv[1] : SDIFF_FIXTURE_DIR;
	sdiff::acceptance::Context ctx;
	try
	{
		ctx.fixtures = sdiff::acceptance::load_fixtures(dir);
	}
	catch (sdiff::Error const &e)
	{
		std::cerr << "acceptance: " << e.what() << "\n";
		return 1;
	}
	int failed = 0;
	for (auto const &c : sdiff::acceptance::criteria())
	{
		auto v = sdiff::acceptance::run_one(c, ctx);
		std::cout << sdiff::acceptance::format_verdict(v) << std::endl;
		failed += !v.passed;
	}
	std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
	return failed == 0 ? 0 : 2;
}
