#include "loopqkz/serialize.hpp"

#include <stdexcept>

namespace loopqkz {

namespace {

std::string bits(const std::vector<std::uint8_t>& v)
{
    std::string s;
    for (auto b : v) s += b ? '1' : '0';
    return s;
}

std::vector<std::uint8_t> unbits(const std::string& s, std::size_t size)
{
    if (s.size() != size) throw std::invalid_argument("edge string has the wrong length");
    std::vector<std::uint8_t> v;
    for (char ch : s) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("edge string must be binary");
        v.push_back(ch == '1');
    }
    return v;
}

}  // namespace

nlohmann::json to_json(const FplConfig& c)
{
    return {{"n", c.n}, {"h", bits(c.h)}, {"v", bits(c.v)}};
}

FplConfig fpl_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("h") || !j.contains("v"))
        throw std::invalid_argument("expected an object with n, h and v");
    const int n = j.at("n").get<int>();
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("size must be odd and at least 3");
    FplConfig c(n);
    c.h = unbits(j.at("h").get<std::string>(), c.h.size());
    c.v = unbits(j.at("v").get<std::string>(), c.v.size());
    if (!is_valid_fpl(c) || !is_hv_symmetric(c)) throw std::invalid_argument("not a symmetric FPL configuration");
    return c;
}

nlohmann::json to_json(const Report& r)
{
    auto out = nlohmann::json::array();
    for (const auto& c : r.results()) {
        nlohmann::json item{{"identity", c.identity}, {"ok", c.ok}};
        if (!c.ok) item["witness"] = c.witness;
        out.push_back(std::move(item));
    }
    return out;
}

nlohmann::json to_json(const CriterionResult& r)
{
    return {{"id", r.id},         {"title", r.title}, {"status", r.passed() ? "PASS" : "FAIL"},
            {"notes", r.notes}, {"checks", to_json(r.report)}};
}

nlohmann::json loop_vector_json(const PatternBasis& basis, const std::vector<std::string>& rendered)
{
    if (rendered.size() != basis.dimension()) throw std::invalid_argument("vector does not match the basis");
    nlohmann::json out = nlohmann::json::object();
    for (std::size_t k = 0; k < rendered.size(); ++k)
        if (rendered[k] != "0") out[basis.pattern(k).encoding()] = rendered[k];
    return out;
}

}  // namespace loopqkz
