#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdiff/combinatorics.hpp"
#include "sdiff/error.hpp"
#include "sdiff/rational.hpp"

namespace sdiff {

enum class GenKind : std::uint8_t
{
	coordinate = 0, ///< x_{alpha,label} at some simplicial level
	variable = 1,   ///< free symbol: group law inputs, odd-line epsilons
	ce = 2,         ///< Chevalley-Eilenberg generator of degree n
	weil_dv = 3,    ///< vertical differential of a CE generator
	form = 4        ///< differential of a coordinate
};

/// A polynomial generator. The field order fixes the global generator order.
struct Generator
{
	GenKind kind = GenKind::variable;
	std::uint16_t weight = 0;
	std::uint16_t degree = 0;
	std::uint32_t a = 0; ///< subset mask, CE degree, or variable namespace
	std::uint32_t b = 0; ///< label or index
	std::uint8_t parity = 0;

	auto operator<=>(Generator const &) const = default;

	static Generator coordinate(Mask alpha, std::uint32_t label, int parity = 0)
	{
		return {GenKind::coordinate, (std::uint16_t)mask_size(alpha), 0, alpha, label, (std::uint8_t)(parity & 1)};
	}
	static Generator variable(char ns, std::uint32_t index, int parity = 0, int weight = 1, int degree = 0)
	{
		return {GenKind::variable, (std::uint16_t)weight, (std::uint16_t)degree, (std::uint32_t)(unsigned char)ns, index,
		        (std::uint8_t)(parity & 1)};
	}
	static Generator ce(int n, std::uint32_t label, int parity = 0)
	{
		return {GenKind::ce, (std::uint16_t)n, (std::uint16_t)n, (std::uint32_t)n, label, (std::uint8_t)(parity & 1)};
	}
	static Generator weil_dv(int n, std::uint32_t label, int parity = 0)
	{
		return {GenKind::weil_dv, (std::uint16_t)n, (std::uint16_t)(n + 1), (std::uint32_t)n, label,
		        (std::uint8_t)(parity & 1)};
	}
	static Generator form(Mask alpha, std::uint32_t label, int parity = 0)
	{
		return {GenKind::form, (std::uint16_t)mask_size(alpha), 1, alpha, label, (std::uint8_t)(parity & 1)};
	}

	/// Exponent of the sign picked up when swapping past h.
	int swap_sign(Generator const &h) const { return ((degree & 1) & (h.degree & 1)) ^ ((parity & 1) & (h.parity & 1)); }
	bool squares_to_zero() const { return ((degree + parity) & 1) != 0; }
};

inline std::string to_string(Generator const &g)
{
	std::string lab = std::to_string(g.b);
	switch (g.kind)
	{
	case GenKind::coordinate:
		return "x" + mask_to_string(g.a) + "." + lab;
	case GenKind::variable:
		return std::string(1, (char)g.a) + lab;
	case GenKind::ce:
		return "xi" + std::to_string(g.a) + "." + lab;
	case GenKind::weil_dv:
		return "dxi" + std::to_string(g.a) + "." + lab;
	case GenKind::form:
		return "dx" + mask_to_string(g.a) + "." + lab;
	}
	return "?";
}

struct Factor
{
	Generator gen;
	std::uint32_t exp = 1;

	auto operator<=>(Factor const &) const = default;
};

/// Product of generator powers in global generator order.
class Monomial
{
  public:
	Monomial() = default;
	explicit Monomial(Generator const &g, std::uint32_t e = 1)
	{
		if (e > 0)
		{
			factors_.push_back({g, e});
			weight_ = g.weight * (int)e;
		}
	}

	/// Builds from an unordered word; returns the sign needed to reach normal form (0 if it vanishes).
	static std::pair<Monomial, int> from_word(std::vector<Factor> const &word)
	{
		Monomial m;
		int sign = 1;
		for (auto const &f : word)
		{
			auto [prod, s] = multiply(m, Monomial(f.gen, f.exp));
			if (s == 0)
				return {Monomial{}, 0};
			sign *= s;
			m = std::move(prod);
		}
		return {m, sign};
	}

	std::vector<Factor> const &factors() const { return factors_; }
	int weight() const { return weight_; }
	bool is_one() const { return factors_.empty(); }

	int degree() const
	{
		int d = 0;
		for (auto const &f : factors_)
			d += f.gen.degree * (int)f.exp;
		return d;
	}
	int parity() const
	{
		int p = 0;
		for (auto const &f : factors_)
			p += f.gen.parity * (int)f.exp;
		return p & 1;
	}
	std::uint32_t total_exponent() const
	{
		std::uint32_t e = 0;
		for (auto const &f : factors_)
			e += f.exp;
		return e;
	}
	std::uint32_t exponent(Generator const &g) const
	{
		for (auto const &f : factors_)
			if (f.gen == g)
				return f.exp;
		return 0;
	}

	/// Product in normal form with its sign; sign 0 means the product vanishes.
	static std::pair<Monomial, int> multiply(Monomial const &x, Monomial const &y)
	{
		Monomial r;
		r.factors_.reserve(x.factors_.size() + y.factors_.size());
		r.weight_ = x.weight_ + y.weight_;
		int sgn_exp = 0;
		// every factor of y moves left past the strictly larger factors of x
		std::size_t i = 0, j = 0;
		int x_tail_deg = 0, x_tail_par = 0; // parity classes of x factors not yet emitted
		for (auto const &f : x.factors_)
		{
			x_tail_deg += (f.gen.degree & 1) * (int)f.exp;
			x_tail_par += (f.gen.parity & 1) * (int)f.exp;
		}
		while (i < x.factors_.size() || j < y.factors_.size())
		{
			if (j == y.factors_.size() || (i < x.factors_.size() && x.factors_[i].gen < y.factors_[j].gen))
			{
				auto const &f = x.factors_[i++];
				x_tail_deg -= (f.gen.degree & 1) * (int)f.exp;
				x_tail_par -= (f.gen.parity & 1) * (int)f.exp;
				r.factors_.push_back(f);
			}
			else if (i == x.factors_.size() || y.factors_[j].gen < x.factors_[i].gen)
			{
				auto const &g = y.factors_[j++];
				sgn_exp += (int)g.exp * ((g.gen.degree & 1) * x_tail_deg + (g.gen.parity & 1) * x_tail_par);
				r.factors_.push_back(g);
			}
			else
			{
				auto const &f = x.factors_[i++];
				auto const &g = y.factors_[j++];
				if (f.gen.squares_to_zero())
					return {Monomial{}, 0};
				x_tail_deg -= (f.gen.degree & 1) * (int)f.exp;
				x_tail_par -= (f.gen.parity & 1) * (int)f.exp;
				sgn_exp += (int)g.exp * ((g.gen.degree & 1) * x_tail_deg + (g.gen.parity & 1) * x_tail_par);
				r.factors_.push_back({f.gen, f.exp + g.exp});
			}
		}
		return {std::move(r), (sgn_exp & 1) ? -1 : 1};
	}

	bool operator==(Monomial const &o) const { return weight_ == o.weight_ && factors_ == o.factors_; }
	bool operator<(Monomial const &o) const
	{
		if (weight_ != o.weight_)
			return weight_ < o.weight_;
		return factors_ < o.factors_;
	}

  private:
	std::vector<Factor> factors_;
	int weight_ = 0;
};

inline std::string to_string(Monomial const &m)
{
	if (m.is_one())
		return "1";
	std::string s;
	for (auto const &f : m.factors())
	{
		if (!s.empty())
			s += "*";
		s += to_string(f.gen);
		if (f.exp != 1)
			s += "^" + std::to_string(f.exp);
	}
	return s;
}

/// Exact polynomial with graded-commutative product, truncated above a total weight.
class Polynomial
{
  public:
	using Terms = std::map<Monomial, Rational>;

	Polynomial() = default;
	explicit Polynomial(std::optional<int> truncation) : trunc_(truncation) {}

	static Polynomial constant(Rational const &c, std::optional<int> truncation = std::nullopt)
	{
		Polynomial p(truncation);
		p.add_term(Monomial{}, c);
		return p;
	}
	static Polynomial generator(Generator const &g, std::optional<int> truncation = std::nullopt)
	{
		Polynomial p(truncation);
		p.add_term(Monomial(g), Rational(1));
		return p;
	}
	static Polynomial monomial(Monomial const &m, Rational const &c = 1, std::optional<int> truncation = std::nullopt)
	{
		Polynomial p(truncation);
		p.add_term(m, c);
		return p;
	}

	Terms const &terms() const { return terms_; }
	std::optional<int> truncation() const { return trunc_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }

	bool fits(int weight) const { return !trunc_ || weight <= *trunc_; }

	void add_term(Monomial const &m, Rational const &c)
	{
		if (is_zero_q(c) || !fits(m.weight()))
			return;
		auto [it, inserted] = terms_.try_emplace(m, c);
		if (!inserted)
		{
			it->second += c;
			if (is_zero_q(it->second))
				terms_.erase(it);
		}
	}

	Rational coefficient(Monomial const &m) const
	{
		auto it = terms_.find(m);
		return it == terms_.end() ? Rational(0) : it->second;
	}

	/// Lowers the truncation weight, dropping terms above it.
	Polynomial truncated(std::optional<int> t) const
	{
		std::optional<int> nt = min_trunc(trunc_, t);
		Polynomial r(nt);
		for (auto const &[m, c] : terms_)
			if (r.fits(m.weight()))
				r.terms_.emplace_hint(r.terms_.end(), m, c);
		return r;
	}

	/// Minimum weight over terms; the zero polynomial has no order.
	int total_order() const
	{
		if (terms_.empty())
			throw InvalidArgument("total order of the zero polynomial");
		return terms_.begin()->first.weight();
	}
	int max_weight() const { return terms_.empty() ? 0 : terms_.rbegin()->first.weight(); }

	Polynomial &operator+=(Polynomial const &o)
	{
		trunc_ = min_trunc(trunc_, o.trunc_);
		if (trunc_)
			prune();
		for (auto const &[m, c] : o.terms_)
			add_term(m, c);
		return *this;
	}
	Polynomial &operator-=(Polynomial const &o)
	{
		trunc_ = min_trunc(trunc_, o.trunc_);
		if (trunc_)
			prune();
		for (auto const &[m, c] : o.terms_)
			add_term(m, -c);
		return *this;
	}
	Polynomial &operator*=(Rational const &s)
	{
		if (is_zero_q(s))
		{
			terms_.clear();
			return *this;
		}
		for (auto &[m, c] : terms_)
			c *= s;
		return *this;
	}
	friend Polynomial operator+(Polynomial a, Polynomial const &b) { return a += b; }
	friend Polynomial operator-(Polynomial a, Polynomial const &b) { return a -= b; }
	friend Polynomial operator*(Polynomial a, Rational const &s) { return a *= s; }
	friend Polynomial operator*(Rational const &s, Polynomial a) { return a *= s; }
	Polynomial operator-() const { return *this * Rational(-1); }

	friend Polynomial operator*(Polynomial const &a, Polynomial const &b)
	{
		Polynomial r(min_trunc(a.trunc_, b.trunc_));
		for (auto const &[ma, ca] : a.terms_)
		{
			for (auto const &[mb, cb] : b.terms_)
			{
				if (!r.fits(ma.weight() + mb.weight()))
					break; // terms of b are sorted by weight
				auto [m, s] = Monomial::multiply(ma, mb);
				if (s == 0)
					continue;
				Rational c = ca * cb;
				if (s < 0)
					c = -c;
				r.add_term(m, c);
			}
		}
		return r;
	}
	Polynomial &operator*=(Polynomial const &o) { return *this = *this * o; }

	/// Exact equality of terms; truncation weights are ignored.
	bool operator==(Polynomial const &o) const { return terms_ == o.terms_; }

	/// Algebra homomorphism sending each assigned generator to its image.
	Polynomial substitute(std::map<Generator, Polynomial> const &assignment, std::optional<int> truncation = std::nullopt) const
	{
		std::optional<int> t = min_trunc(trunc_, truncation);
		for (auto const &[g, img] : assignment)
		{
			t = min_trunc(t, img.trunc_);
			for (auto const &[m, c] : img.terms_)
				if ((m.degree() & 1) != (g.degree & 1) || m.parity() != (g.parity & 1))
					throw InvalidArgument("substitution image of " + to_string(g) + " has mismatched parity");
		}
		Polynomial result(t);
		std::map<std::pair<Generator, std::uint32_t>, Polynomial> powers;
		auto power = [&](Generator const &g, std::uint32_t e) -> Polynomial const & {
			auto key = std::make_pair(g, e);
			if (auto it = powers.find(key); it != powers.end())
				return it->second;
			Polynomial base = [&] {
				auto it = assignment.find(g);
				return it == assignment.end() ? Polynomial::generator(g, t) : it->second.truncated(t);
			}();
			Polynomial p = Polynomial::constant(1, t);
			for (std::uint32_t k = 0; k < e; ++k)
				p = p * base;
			return powers.emplace(key, std::move(p)).first->second;
		};
		for (auto const &[m, c] : terms_)
		{
			Polynomial img = Polynomial::constant(c, t);
			for (auto const &f : m.factors())
			{
				img = img * power(f.gen, f.exp);
				if (img.is_zero())
					break;
			}
			result += img;
		}
		return result;
	}

	/// Coefficient times the product of exponent factorials: the iterated partial derivative at zero.
	Rational multilinear_coefficient(Monomial const &m) const
	{
		Rational c = coefficient(m);
		for (auto const &f : m.factors())
			for (std::uint32_t k = 2; k <= f.exp; ++k)
				c *= k;
		return c;
	}

  private:
	static bool is_zero_q(Rational const &q) { return sgn(q) == 0; }
	static std::optional<int> min_trunc(std::optional<int> a, std::optional<int> b)
	{
		if (!a)
			return b;
		if (!b)
			return a;
		return std::min(*a, *b);
	}
	void prune()
	{
		while (!terms_.empty() && !fits(terms_.rbegin()->first.weight()))
			terms_.erase(std::prev(terms_.end()));
	}

	Terms terms_;
	std::optional<int> trunc_;
};

inline std::string to_string(Polynomial const &p)
{
	if (p.is_zero())
		return "0";
	std::string s;
	bool first = true;
	for (auto const &[m, c] : p.terms())
	{
		Rational a = abs(c);
		bool neg = sgn(c) < 0;
		if (first)
			s += neg ? "-" : "";
		else
			s += neg ? " - " : " + ";
		first = false;
		if (m.is_one())
			s += to_string(a);
		else if (a == 1)
			s += to_string(m);
		else
			s += to_string(a) + "*" + to_string(m);
	}
	return s;
}

/// Applies the derivation with the given generator images and degree (even parity).
/// Generators without an image are sent to zero unless `strict` is set, in which case they raise.
inline Polynomial apply_derivation(Polynomial const &f, std::map<Generator, Polynomial> const &images, int derivation_degree,
                                   bool strict = false, std::optional<int> truncation = std::nullopt)
{
	Polynomial result(truncation);
	for (auto const &[m, c] : f.terms())
	{
		std::vector<Generator> word;
		for (auto const &fac : m.factors())
			for (std::uint32_t k = 0; k < fac.exp; ++k)
				word.push_back(fac.gen);
		int prefix_deg = 0;
		for (std::size_t pos = 0; pos < word.size(); ++pos)
		{
			auto it = images.find(word[pos]);
			if (it == images.end())
			{
				if (strict)
					throw InvalidArgument("derivation undefined on " + to_string(word[pos]));
			}
			else if (!it->second.is_zero())
			{
				Polynomial prefix = Polynomial::constant(c, truncation), suffix = Polynomial::constant(1, truncation);
				for (std::size_t q = 0; q < pos; ++q)
					prefix = prefix * Polynomial::generator(word[q], truncation);
				for (std::size_t q = pos + 1; q < word.size(); ++q)
					suffix = suffix * Polynomial::generator(word[q], truncation);
				Polynomial term = prefix * it->second * suffix;
				if ((derivation_degree & 1) && (prefix_deg & 1))
					term *= Rational(-1);
				result += term;
			}
			prefix_deg += word[pos].degree;
		}
	}
	return result;
}

} // namespace sdiff
