#include "comaj/qpoly_io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace comaj {

nlohmann::json to_json(const QPoly& p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"e", e}, {"c", c.get_str()}});
    return {{"k", p.nvars()}, {"D", p.degree_bound()}, {"terms", std::move(terms)}};
}

QPoly qpoly_from_json(const nlohmann::json& j)
{
    try {
        QPoly p(Truncation(j.at("k").get<int>(), j.at("D").get<int>()));
        for (const auto& term : j.at("terms")) {
            const auto e = term.at("e").get<ExponentVector>();
            if (e.size() != static_cast<std::size_t>(p.nvars()))
                throw std::invalid_argument("exponent vector length does not match k");
            if (total_degree(e) > static_cast<std::uint64_t>(p.degree_bound()))
                throw std::invalid_argument("term exceeds the truncation degree");
            mpz_class c;
            if (c.set_str(term.at("c").get<std::string>(), 10) != 0)
                throw std::invalid_argument("coefficient is not a decimal integer");
            p.add_term(e, c);
        }
        return p;
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed QPoly JSON: ") + ex.what());
    }
}

std::string canonical_json(const QPoly& p) { return to_json(p).dump(); }

std::string sha256_hex(const std::string& bytes)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 computation failed");
    std::ostringstream os;
    os << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < len; ++i)
        os << std::setw(2) << static_cast<int>(md[i]);
    return os.str();
}

std::string digest(const QPoly& p) { return sha256_hex(canonical_json(p)); }

namespace {

void monomials_of_degree(int var, std::uint32_t remaining, ExponentVector& e,
                         std::vector<ExponentVector>& out)
{
    if (var + 1 == static_cast<int>(e.size())) {
        e[static_cast<std::size_t>(var)] = remaining;
        out.push_back(e);
        return;
    }
    for (std::uint32_t x = 0; x <= remaining; ++x) {
        e[static_cast<std::size_t>(var)] = x;
        monomials_of_degree(var + 1, remaining - x, e, out);
    }
}

}  // namespace

std::string to_csv(const QPoly& p)
{
    std::ostringstream os;
    for (int i = 1; i <= p.nvars(); ++i)
        os << "e_" << i << ',';
    os << "coeff\n";
    for (int d = 0; d <= p.degree_bound(); ++d) {
        std::vector<ExponentVector> block;
        ExponentVector e(static_cast<std::size_t>(p.nvars()), 0);
        monomials_of_degree(0, static_cast<std::uint32_t>(d), e, block);
        std::sort(block.begin(), block.end());
        for (const auto& m : block) {
            for (auto x : m)
                os << x << ',';
            os << p.coeff(m).get_str() << '\n';
        }
    }
    return os.str();
}

}  // namespace comaj
