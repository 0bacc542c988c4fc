#include "qflat/gram.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qflat {

unsigned long long Budget::default_limit() {
    if (const char* env = std::getenv("QFLAT_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10'000'000ULL;
}

GramMatrix::GramMatrix(IntMat m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw NotSymmetric("gram matrix must be square");
    if (!m_.is_symmetric()) throw NotSymmetric("gram matrix must be symmetric");
    if (int k = first_nonpositive_minor(m_); k != 0)
        throw NotPositiveDefinite("leading principal minor " + std::to_string(k) +
                                      " is not positive",
                                  k);
}

bool GramMatrix::has_unit_scale() const {
    Int g = 0;
    for (int i = 0; i < dim(); ++i)
        for (int j = i; j < dim(); ++j) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), at(i, j).get_mpz_t());
            if (g == 1) return true;
        }
    return g == 1;  // rank 0 falls through with g == 0
}

Lattice::Lattice(GramMatrix g) : gram_(std::move(g)), disc_(det(gram_.mat())) {}

Lattice::Lattice(GramMatrix g, Int known_disc) : gram_(std::move(g)), disc_(std::move(known_disc)) {}

Lattice make_lattice(const IntMat& rows) {
    return Lattice(GramMatrix(rows));
}

GramMatrix GramMatrix::trusted(IntMat m) {
    GramMatrix g;
    g.m_ = std::move(m);
    return g;
}

namespace {

IntMat block_diag(const IntMat& a, const IntMat& b) {
    IntMat m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

}  // namespace

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    return Lattice(GramMatrix::trusted(block_diag(a.gram().mat(), b.gram().mat())),
                   a.disc() * b.disc());
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
    Lattice acc;
    for (const auto& p : parts) acc = direct_sum(acc, p);
    return acc;
}

Lattice scale(const Lattice& l, const Int& a) {
    if (a < 1) throw PreconditionFailed("scale factor must be >= 1");
    IntMat m = l.gram().mat();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) *= a;
    Int d = l.disc();
    for (int i = 0; i < l.rank(); ++i) d *= a;
    return Lattice(GramMatrix::trusted(std::move(m)), d);
}

Lattice diag_lattice(const std::vector<Int>& d) {
    IntMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    Int disc = 1;
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] <= 0) throw NotPositiveDefinite("diagonal entry must be positive",
                                                 static_cast<int>(i) + 1);
        m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
        disc *= d[i];
    }
    return Lattice(GramMatrix::trusted(std::move(m)), disc);
}

Lattice cubic_lattice(int n) {
    return diag_lattice(std::vector<Int>(static_cast<size_t>(n), Int(1)));
}

Lattice root_lattice(RootFamily f, int n) {
    if (f == RootFamily::A) {
        if (n < 1) throw UnsupportedFamilyRank("A_n needs n >= 1");
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) {
            m.at(i, i) = 2;
            if (i + 1 < n) {
                m.at(i, i + 1) = -1;
                m.at(i + 1, i) = -1;
            }
        }
        return Lattice(GramMatrix::trusted(std::move(m)), Int(n + 1));
    }
    if (n < 3) throw UnsupportedFamilyRank("D_n needs n >= 3");
    // basis e1-e2, ..., e_{n-1}-e_n, e_{n-1}+e_n
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 2;
    for (int i = 0; i + 1 < n - 1; ++i) {
        m.at(i, i + 1) = -1;
        m.at(i + 1, i) = -1;
    }
    if (n >= 3) {
        m.at(n - 3, n - 1) = -1;
        m.at(n - 1, n - 3) = -1;
    }
    return Lattice(GramMatrix::trusted(std::move(m)), Int(4));
}

bool FormTriple::operator<(const FormTriple& o) const {
    if (a != o.a) return a < o.a;
    if (c != o.c) return c < o.c;
    return b < o.b;
}

std::string FormTriple::str() const {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

Lattice triple_to_gram(const FormTriple& f) {
    if (!f.positive_definite()) throw NotPositiveDefinite("form is not positive definite", 1);
    if (mod_nonneg(f.b, 2) != 0)
        throw OddMiddleCoefficient("middle coefficient " + f.b.get_str() +
                                   " is odd; no unit-scale integral gram exists");
    IntMat m(2, 2);
    m.at(0, 0) = f.a;
    m.at(0, 1) = m.at(1, 0) = f.b / 2;
    m.at(1, 1) = f.c;
    return make_lattice(m);
}

Lattice triple_to_doubled_gram(const FormTriple& f) {
    if (!f.positive_definite()) throw NotPositiveDefinite("form is not positive definite", 1);
    IntMat m(2, 2);
    m.at(0, 0) = 2 * f.a;
    m.at(0, 1) = m.at(1, 0) = f.b;
    m.at(1, 1) = 2 * f.c;
    return make_lattice(m);
}

FormTriple gram_to_triple(const Lattice& g) {
    if (g.rank() != 2) throw PreconditionFailed("gram_to_triple needs rank 2");
    return FormTriple{g.at(0, 0), 2 * g.at(0, 1), g.at(1, 1)};
}

// --- IO ----------------------------------------------------------------------

namespace {

Lattice lattice_from_rows(const std::vector<std::vector<Int>>& rows) {
    size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n) throw ParseError("jagged matrix: expected " + std::to_string(n) +
                                            " entries per row");
    IntMat m(static_cast<int>(n), static_cast<int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return make_lattice(m);
}

}  // namespace

Lattice lattice_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("gram") || !j["gram"].is_array())
        throw ParseError("expected {\"gram\": [[...], ...]}");
    std::vector<std::vector<Int>> rows;
    for (const auto& r : j["gram"]) {
        if (!r.is_array()) throw ParseError("gram rows must be arrays");
        std::vector<Int> row;
        for (const auto& v : r) {
            if (v.is_number_integer())
                row.emplace_back(static_cast<long>(v.get<long long>()));
            else if (v.is_string())
                row.emplace_back(v.get<std::string>());
            else
                throw ParseError("gram entries must be integers");
        }
        rows.push_back(std::move(row));
    }
    return lattice_from_rows(rows);
}

Lattice lattice_from_text(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    std::stringstream ss(text);
    std::string rowtxt;
    while (std::getline(ss, rowtxt, ';')) {
        std::stringstream rs(rowtxt);
        std::vector<Int> row;
        std::string tok;
        while (rs >> tok) {
            try {
                row.emplace_back(tok);
            } catch (const std::invalid_argument&) {
                throw ParseError("bad integer '" + tok + "'");
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty lattice text");
    return lattice_from_rows(rows);
}

Lattice lattice_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    size_t p = text.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && text[p] == '{') return lattice_from_json(text);
    return lattice_from_text(text);
}

std::string lattice_to_json(const Lattice& l) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < l.rank(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < l.rank(); ++j) {
            const Int& v = l.at(i, j);
            if (v.fits_slong_p())
                row.push_back(v.get_si());
            else
                row.push_back(v.get_str());
        }
        rows.push_back(row);
    }
    nlohmann::json j;
    j["gram"] = rows;
    return j.dump();
}

}  // namespace qflat
