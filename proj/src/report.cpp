#include "pwlie/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace pwlie {

std::string format_pweights_table(const PermutationWeightSet& set) {
    std::ostringstream os;
    for (Int d = 0; d <= set.horizon(); ++d) {
        const auto& lst = set.at_depth(d);
        if (lst.empty()) continue;
        bool first = true;
        for (const FiniteWeight& w : lst) {
            if (!first) os << ' ';
            os << display(w, d);
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

std::string format_strings_table(const StringFunctionTable& table) {
    std::ostringstream os;
    for (const StringFunction& sf : table.strings()) {
        os << display(sf.cls.finite, sf.cls.offset) << " :";
        for (Int m = sf.cls.offset; m <= table.horizon(); ++m)
            os << ' ' << sf.coeffs[m - sf.cls.offset];
        os << '\n';
    }
    return os.str();
}

std::string format_strings_series(const StringFunctionTable& table) {
    std::ostringstream os;
    for (const StringFunction& sf : table.strings()) {
        os << display(sf.cls.finite, sf.cls.offset) << " : ";
        const Int m0 = sf.cls.offset;
        if (m0 == 1)
            os << "q ( ";
        else if (m0 > 1)
            os << "q^" << m0 << " ( ";
        for (std::size_t i = 0; i < sf.coeffs.size(); ++i) {
            if (i) os << " + ";
            os << sf.coeffs[i];
            if (i == 1) os << " q";
            if (i > 1) os << " q^" << i;
        }
        os << " + ...";
        if (m0 >= 1) os << " )";
        os << '\n';
    }
    return os.str();
}

std::string strings_to_json(const StringFunctionTable& table, const AlgebraContext& ctx) {
    nlohmann::json j;
    j["rank"] = ctx.rank();
    j["labels"] = table.source().labels();
    j["horizon"] = table.horizon();
    nlohmann::json classes = nlohmann::json::array();
    for (const StringFunction& sf : table.strings()) {
        nlohmann::json cls;
        cls["labels"] = to_dynkin(sf.cls.finite);
        cls["M0"] = sf.cls.offset;
        cls["coeffs"] = sf.coeffs;
        classes.push_back(std::move(cls));
    }
    j["classes"] = std::move(classes);
    return j.dump(1);
}

std::string strings_to_csv(const StringFunctionTable& table) {
    std::ostringstream os;
    os << "class,M0";
    for (Int m = 0; m <= table.horizon(); ++m) os << ",c" << m;
    os << '\n';
    for (const StringFunction& sf : table.strings()) {
        os << '"' << display(sf.cls.finite, sf.cls.offset) << '"' << ',' << sf.cls.offset;
        for (Int m = 0; m <= table.horizon(); ++m)
            os << ',' << (m < sf.cls.offset ? 0 : sf.coeffs[m - sf.cls.offset]);
        os << '\n';
    }
    return os.str();
}

}  // namespace pwlie
