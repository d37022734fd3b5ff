#include <gtest/gtest.h>

#include <random>

#include "sdiff/dold_kan.hpp"

using namespace sdiff;

namespace {

Matrix mat(std::size_t r, std::size_t c, std::vector<int> const &v)
{
	Matrix m(r, c);
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = 0; j < c; ++j)
			m(i, j) = v[i * c + j];
	return m;
}

// E_1 = <v>, E_2 = <w>, boundary w -> v
ChainComplex line_complex() { return ChainComplex({0, 1, 1}, {Matrix(0, 1), mat(1, 1, {1})}); }

// Random complex with boundaries built as products through a split, so boundary^2 = 0.
ChainComplex random_complex(std::mt19937 &rng, int top, int max_rank)
{
	std::vector<std::size_t> ranks;
	for (int k = 0; k <= top; ++k)
		ranks.push_back(rng() % (max_rank + 1));
	std::vector<Matrix> maps;
	Matrix prev; // boundary into degree k-1
	for (int k = 1; k <= top; ++k)
	{
		Matrix cand(ranks[k - 1], ranks[k]);
		for (std::size_t i = 0; i < cand.rows(); ++i)
			for (std::size_t j = 0; j < cand.cols(); ++j)
				cand(i, j) = (int)(rng() % 5) - 2;
		if (k >= 2 && prev.cols() > 0 && cand.cols() > 0)
		{
			// project the candidate into the kernel of the previous boundary
			Matrix ker = nullspace(prev);
			if (ker.cols() == 0)
				cand = Matrix(ranks[k - 1], ranks[k]);
			else
			{
				Matrix coeffs(ker.cols(), ranks[k]);
				for (std::size_t i = 0; i < coeffs.rows(); ++i)
					for (std::size_t j = 0; j < coeffs.cols(); ++j)
						coeffs(i, j) = (int)(rng() % 3) - 1;
				cand = ker * coeffs;
			}
		}
		maps.push_back(cand);
		prev = cand;
	}
	return ChainComplex(ranks, maps);
}

Vector random_vector(std::mt19937 &rng, std::size_t n)
{
	Vector v(n);
	for (auto &x : v)
		x = (int)(rng() % 7) - 3;
	return v;
}

} // namespace

TEST(ChainComplexTest, RejectsNonzeroSquare)
{
	EXPECT_THROW(ChainComplex({1, 1, 1}, {mat(1, 1, {1}), mat(1, 1, {1})}), IdentityViolation);
	EXPECT_THROW(ChainComplex({1, 1}, {mat(2, 1, {1, 1})}), InvalidArgument);
}

TEST(DoldKan, FaceExamples)
{
	auto e = line_complex();
	DKBasis b2 = dk_basis(e, 2), b1 = dk_basis(e, 1);
	std::size_t w12 = b2.position(0b11, 0);
	Matrix d0 = dk_face_matrix(e, 2, 0);
	Vector img = d0.column(w12);
	Vector expect(b1.size());
	expect[b1.position(0b1, 0)] = 1;
	EXPECT_EQ(img, expect);
	EXPECT_TRUE(is_zero(dk_face_matrix(e, 2, 1).column(w12)));
	EXPECT_TRUE(is_zero(dk_face_matrix(e, 2, 2).column(w12)));
	EXPECT_THROW(dk_face_matrix(e, 2, 3), InvalidArgument);
}

TEST(DoldKan, DegeneracyExamples)
{
	auto e = line_complex();
	DKBasis b1 = dk_basis(e, 1), b2 = dk_basis(e, 2);
	Matrix s0 = dk_degeneracy_matrix(e, 1, 0), s1 = dk_degeneracy_matrix(e, 1, 1);
	Vector v1 = s0.column(b1.position(0b1, 0));
	Vector e2(b2.size()), e1(b2.size());
	e2[b2.position(0b10, 0)] = 1;
	e1[b2.position(0b01, 0)] = 1;
	EXPECT_EQ(v1, e2);
	EXPECT_EQ(s1.column(b1.position(0b1, 0)), e1);

	ChainComplex point({1}, {});
	EXPECT_EQ(dk_degeneracy_matrix(point, 0, 0), Matrix::identity(1));
}

TEST(DoldKan, SimplicialIdentitiesAndRoundTripRandom)
{
	std::mt19937 rng(21);
	for (int trial = 0; trial < 25; ++trial)
	{
		auto e = random_complex(rng, 3, 3);
		auto v = denormalize(e, 5);
		EXPECT_FALSE(simplicial_identity_violation(v).has_value());
		EXPECT_TRUE(same_complex(normalize(v), e));
	}
}

TEST(DoldKan, NormalizeExamples)
{
	ChainComplex q0({1, 1}, {Matrix(1, 1)});
	EXPECT_TRUE(same_complex(normalize(denormalize(q0, 4)), q0));

	ChainComplex zero({0}, {});
	EXPECT_TRUE(same_complex(normalize(denormalize(zero, 3)), zero));

	ChainComplex top3({0, 0, 0, 1}, {});
	auto v = denormalize(top3, 4);
	EXPECT_EQ(v.dims[0], 0u);
	EXPECT_EQ(v.dims[2], 0u);
	EXPECT_EQ(v.dims[3], 1u);
	EXPECT_EQ(v.dims[4], 4u);
	EXPECT_TRUE(same_complex(normalize(v), top3));
}

TEST(DoldKan, NormalizeRejectsBrokenIdentity)
{
	auto v = denormalize(line_complex(), 3);
	v.faces[2][1](0, 0) += 1;
	EXPECT_THROW(normalize(v), IdentityViolation);
}

TEST(DoldKan, DualDenormalizationIsCosimplicial)
{
	std::mt19937 rng(22);
	for (int trial = 0; trial < 10; ++trial)
	{
		auto e = random_complex(rng, 3, 2);
		std::vector<Matrix> maps;
		for (int k = 1; k <= e.top_degree(); ++k)
			maps.push_back(e.d(k).transpose());
		CochainComplex y(e.ranks, maps);
		auto x = dual_denormalize(y, 4);
		EXPECT_FALSE(cosimplicial_identity_violation(x).has_value());
		auto n = cosimplicial_normalize_linear(x);
		for (int k = 0; k <= 3; ++k)
			EXPECT_EQ(n.basis[k].cols(), y.rank(k));
	}
}

TEST(DoldKan, ShuffleSigns)
{
	EXPECT_EQ(shuffle_sign(0b01, 0b10), 1);
	EXPECT_EQ(shuffle_sign(0b10, 0b01), -1);
	EXPECT_EQ(shuffle_sign(0b11, 0b10), 0);
	EXPECT_EQ(shuffle_sign(0, 0), 1);
}

TEST(DoldKan, ShKillsOverlapsAndFixesLevelZero)
{
	std::vector<std::size_t> ranks{1, 1, 1};
	DKBasis b(ranks, 2);
	Tensor t;
	t.level = 2;
	t.add(b.position(0b11, 0), b.position(0b10, 0), 1);
	EXPECT_TRUE(sh(ranks, t).is_zero());

	Tensor u;
	u.level = 2;
	u.add(b.position(0b01, 0), b.position(0b10, 0), 1);
	u.add(b.position(0b10, 0), b.position(0b01, 0), 1);
	EXPECT_TRUE(sh(ranks, u).is_zero());

	Tensor z;
	z.level = 0;
	z.add(0, 0, 3);
	auto img = sh(ranks, z).normalized();
	ASSERT_EQ(img.size(), 1u);
	EXPECT_EQ((img[{0, 0, 0}]), 3);
}

TEST(DoldKan, ShAfterAwIsIdentity)
{
	std::mt19937 rng(23);
	for (int trial = 0; trial < 20; ++trial)
	{
		auto e = random_complex(rng, 3, 2);
		std::vector<Matrix> maps;
		for (int k = 1; k <= e.top_degree(); ++k)
			maps.push_back(e.d(k).transpose());
		CochainComplex y(e.ranks, maps);
		auto x = dual_denormalize(y, 4);
		for (int p = 0; p <= 2; ++p)
			for (int q = 0; p + q <= 4 && q <= 2; ++q)
			{
				if (y.rank(p) == 0 || y.rank(q) == 0)
					continue;
				Vector fc = random_vector(rng, y.rank(p)), gc = random_vector(rng, y.rank(q));
				// lift to the denormalization basis: f (x) e_{1..p}
				DKBasis bp(y.ranks, p), bq(y.ranks, q);
				Vector f(bp.size()), g(bq.size());
				for (std::size_t a = 0; a < fc.size(); ++a)
					f[bp.position(full_mask(p), a)] = fc[a];
				for (std::size_t a = 0; a < gc.size(); ++a)
					g[bq.position(full_mask(q), a)] = gc[a];
				auto image = sh(y.ranks, aw(x, f, p, g, q)).normalized();
				std::map<std::tuple<int, std::size_t, std::size_t>, Rational> expect;
				for (std::size_t a = 0; a < fc.size(); ++a)
					for (std::size_t c = 0; c < gc.size(); ++c)
						if (sgn(fc[a] * gc[c]) != 0)
							expect[{p, a, c}] = fc[a] * gc[c];
				EXPECT_EQ(image, expect) << "p=" << p << " q=" << q;
			}
	}
}

TEST(DoldKan, OverlappingBasisCounts)
{
	EXPECT_TRUE(overlapping_basis({1, 1}, 0).empty());
	auto one = overlapping_basis({0, 1}, 1);
	ASSERT_EQ(one.size(), 1u);
	EXPECT_EQ(one[0].first.alpha, 0b1u);
	EXPECT_EQ(one[0].second.alpha, 0b1u);

	// brute force over subset pairs for rank-1 E_1 and E_2 = 0
	std::size_t brute = 0;
	for (Mask a = 0; a < 4; ++a)
		for (Mask b = 0; b < 4; ++b)
			if (mask_size(a) <= 1 && mask_size(b) <= 1 && (a | b) == 3 && (a & b))
				++brute;
	EXPECT_EQ(overlapping_basis({0, 1, 0}, 2).size(), brute);
}

TEST(DoldKan, TranspositionRelationsLieInKernel)
{
	std::vector<std::size_t> ranks{1, 2, 1};
	for (int n = 2; n <= 3; ++n)
		for (auto const &t : transposition_relations(ranks, n))
			EXPECT_TRUE(sh(ranks, t).is_zero());
}

TEST(DoldKan, KernelOfShIsOverlapsPlusTranspositions)
{
	std::vector<std::size_t> ranks{1, 1, 1};
	for (int n = 1; n <= 3; ++n)
	{
		auto cover = covering_basis(ranks, n);
		DKBasis basis(ranks, n);
		std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
		for (auto const &[a, b] : cover)
			index[{basis.position(a.alpha, a.index), basis.position(b.alpha, b.index)}] = index.size();
		// the sh matrix on covering tensors
		std::map<std::tuple<Mask, int, std::size_t, std::size_t>, std::size_t> rows;
		std::vector<std::pair<std::size_t, ShuffleImage>> images;
		for (auto const &[key, col] : index)
		{
			Tensor t;
			t.level = n;
			t.add(key.first, key.second, 1);
			auto img = sh(ranks, t);
			for (auto const &[k, c] : img.coeffs)
				rows.try_emplace(k, rows.size());
			images.push_back({col, img});
		}
		Matrix shm(rows.size(), index.size());
		for (auto const &[col, img] : images)
			for (auto const &[k, c] : img.coeffs)
				shm(rows[k], col) = c;
		std::size_t kernel = index.size() - rank(shm);

		std::vector<Vector> gens;
		for (auto const &[a, b] : overlapping_basis(ranks, n))
		{
			Vector v(index.size());
			v[index[{basis.position(a.alpha, a.index), basis.position(b.alpha, b.index)}]] = 1;
			gens.push_back(v);
		}
		for (auto const &t : transposition_relations(ranks, n))
		{
			Vector v(index.size());
			for (auto const &[k, c] : t.coeffs)
				v[index.at(k)] += c;
			gens.push_back(v);
		}
		std::size_t spanned = gens.empty() ? 0 : rank(Matrix::from_columns(index.size(), gens));
		EXPECT_EQ(spanned, kernel) << "level " << n;
	}
}
