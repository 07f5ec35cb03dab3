#include "coloc/uncertainty.hpp"

#include <cmath>
#include <numbers>

#include "coloc/errors.hpp"

namespace coloc {

UncertaintyModel UncertaintyModel::curve() {
    return UncertaintyModel{UncertaintyKind::curve, {}};
}

UncertaintyModel UncertaintyModel::linear() {
    return UncertaintyModel{UncertaintyKind::linear, {}};
}

UncertaintyModel UncertaintyModel::certain() {
    return UncertaintyModel{UncertaintyKind::certain, {}};
}

UncertaintyModel UncertaintyModel::categorical(std::vector<CategoricalStep> steps) {
    UncertaintyModel m{UncertaintyKind::categorical, std::move(steps)};
    m.validate();
    return m;
}

UncertaintyModel UncertaintyModel::default_categorical() {
    return categorical({{0.25, 1.0}, {0.5, 0.75}, {0.75, 0.5}, {1.0, 0.25}});
}

UncertaintyModel UncertaintyModel::parse(const std::string& name) {
    if (name == "curve") return curve();
    if (name == "linear") return linear();
    if (name == "certain") return certain();
    if (name == "categorical") return default_categorical();
    throw ValidationError("unknown uncertainty model '" + name + "'");
}

std::string UncertaintyModel::name() const {
    switch (kind) {
        case UncertaintyKind::categorical: return "categorical";
        case UncertaintyKind::linear: return "linear";
        case UncertaintyKind::curve: return "curve";
        case UncertaintyKind::certain: return "certain";
    }
    return "curve";
}

void UncertaintyModel::validate() const {
    if (kind != UncertaintyKind::categorical) return;
    if (steps.empty()) throw ValidationError("categorical model: no steps");
    double prev_bound = 0.0;
    double prev_prob = 1.0;
    for (const auto& step : steps) {
        if (!(step.upper_bound > prev_bound)) {
            throw ValidationError("categorical model: bounds must strictly increase");
        }
        if (step.probability < 0.0 || step.probability > 1.0) {
            throw ValidationError("categorical model: probability outside [0,1]");
        }
        if (step.probability > prev_prob) {
            throw ValidationError("categorical model: probabilities must be nonincreasing");
        }
        prev_bound = step.upper_bound;
        prev_prob = step.probability;
    }
    if (steps.back().upper_bound != 1.0) {
        throw ValidationError("categorical model: last bound must be 1.0");
    }
}

double presence_probability(const UncertaintyModel& model, double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw ValidationError("presence probability: normalized distance outside [0,1]");
    }
    switch (model.kind) {
        case UncertaintyKind::curve:
            return std::cos(std::numbers::pi * x) / 2.0 + 0.5;
        case UncertaintyKind::linear:
            return 1.0 - x;
        case UncertaintyKind::certain:
            return 1.0;
        case UncertaintyKind::categorical:
            for (const auto& step : model.steps) {
                if (x <= step.upper_bound) return step.probability;
            }
            return model.steps.back().probability;
    }
    return 0.0;
}

}  // namespace coloc
