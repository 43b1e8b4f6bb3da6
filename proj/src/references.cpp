#include "ritz/study.hpp"

namespace ritz {

namespace {

// Riccati-Pade reference eigenvalues for the two double wells (~80-94 digits)
// and the PT-symmetric cubic oscillator (~31-37 digits).
const ReferenceEigenvalues kQuartic{
    ModelId::V_Q,
    {
        "-3.410142761239829475297709653521909198712339047564881868937911775329611301715294",
        "-3.2506753622892359802285137755477368771546011476394241429953014335680690809034749688022953825298",
        "0.638919563783838124491010103332504264852401329058137207433367771840730088316019330941500824",
        "2.5812162706174514809779380656962090234197947974759598949291704975284539346710703866627200928172",
    }};

const ReferenceEigenvalues kSextic{
    ModelId::V_S,
    {
        "-0.523268622127552239416169497190784061165634222518711069953854385633821213450649003542309",
        "1.00576834022554481670604083074777604686886504417542730471341100873617568288708176003637",
        "5.374970008840044994060514769418235325821754311501338177585996687355671683247232390293",
        "10.572585044585912113906061555314011464842213880057529217715660995992776130576146017312",
    }};

const ReferenceEigenvalues kCubicPT{
    ModelId::IX3,
    {
        "1.156267071988113293799219177999951",
        "4.1092287528096515358436684785613",
        "7.5622738549788280413518091106314827208",
        "11.314421820195804402233783948426989",
    }};

} // namespace

std::vector<BigReal> ReferenceEigenvalues::parse(const PrecisionContext& ctx) const {
    std::vector<BigReal> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(BigReal::from_string(v, ctx));
    return out;
}

const ReferenceEigenvalues& reference_table(ModelId id) {
    switch (id) {
        case ModelId::V_Q:
            return kQuartic;
        case ModelId::V_S:
            return kSextic;
        case ModelId::IX3:
            return kCubicPT;
    }
    throw ConfigError("unknown reference model id");
}

std::optional<ModelId> builtin_model(const Potential& v) {
    static const Potential quartic = parse_potential("x^4-5*x^2");
    static const Potential sextic = parse_potential("x^6-4*x^2");
    static const Potential cubic_pt = parse_potential("i*x^3");
    if (v == quartic) return ModelId::V_Q;
    if (v == sextic) return ModelId::V_S;
    if (v == cubic_pt) return ModelId::IX3;
    return std::nullopt;
}

std::string model_name(ModelId id) {
    switch (id) {
        case ModelId::V_Q:
            return "V_Q";
        case ModelId::V_S:
            return "V_S";
        case ModelId::IX3:
            return "ix3";
    }
    return "?";
}

} // namespace ritz
