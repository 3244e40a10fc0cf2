#include "rcm/state_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rcm {

namespace {

using nlohmann::json;

Scalar parse_amp(const json& amp) {
    if (amp.is_string()) return parse_real_token(amp.get<std::string>());
    if (amp.is_number_integer()) return Scalar::integer(amp.get<long>());
    if (amp.is_number_float()) return Scalar::numeric({amp.get<double>(), 0.0});
    if (amp.is_object()) {
        if (!amp.contains("re") && !amp.contains("im"))
            throw Error(ErrorCode::malformed_document, "amp object needs re and/or im");
        Scalar re = amp.contains("re") ? parse_amp(amp.at("re")) : Scalar();
        Scalar im = amp.contains("im") ? parse_amp(amp.at("im")) : Scalar();
        if (re.is_exact() && im.is_exact())
            return Scalar::exact(re.exact_value().re, im.exact_value().re);
        return Scalar::numeric({re.to_complex().real(), im.to_complex().real()});
    }
    throw Error(ErrorCode::malformed_document, "unsupported amp value");
}

std::string numeric_token(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json amp_to_json(const Scalar& s) {
    if (s.is_exact()) {
        const auto& e = s.exact_value();
        if (e.im == 0) return exact_real_token(e.re);
        return json{{"re", exact_real_token(e.re)}, {"im", exact_real_token(e.im)}};
    }
    auto c = s.to_complex();
    if (c.imag() == 0.0) return numeric_token(c.real());
    return json{{"re", numeric_token(c.real())}, {"im", numeric_token(c.imag())}};
}

} // namespace

PureState parse_state(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::malformed_document, e.what());
    }
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("terms"))
        throw Error(ErrorCode::malformed_document, "document needs dims and terms");

    std::vector<int> dims;
    PureState::TermMap terms;
    try {
        dims = doc.at("dims").get<std::vector<int>>();
        if (!doc.at("terms").is_array())
            throw Error(ErrorCode::malformed_document, "terms must be an array");
        for (const auto& term : doc.at("terms")) {
            if (!term.is_object() || !term.contains("index") || !term.contains("amp"))
                throw Error(ErrorCode::malformed_document, "term needs index and amp");
            MultiIndex idx = term.at("index").get<MultiIndex>();
            if (terms.count(idx))
                throw Error(ErrorCode::malformed_document, "duplicate index in terms");
            terms.emplace(std::move(idx), parse_amp(term.at("amp")));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::malformed_document, e.what());
    }
    return PureState(std::move(dims), std::move(terms));
}

PureState load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::malformed_document, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state(buf.str());
}

std::string serialize_state(const PureState& state) {
    json terms = json::array();
    for (const auto& [idx, amp] : state.terms())
        terms.push_back({{"index", idx}, {"amp", amp_to_json(amp)}});
    json doc{{"dims", state.dims()}, {"terms", terms}};
    return doc.dump(2);
}

} // namespace rcm
