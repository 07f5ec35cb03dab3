#pragma once

#include <string>
#include <vector>

namespace coloc {

enum class UncertaintyKind { categorical, linear, curve, certain };

/// One step of a categorical model: probability applies for normalized
/// distances x <= upper_bound (and above the previous step's bound).
struct CategoricalStep {
    double upper_bound = 0.0;
    double probability = 0.0;

    friend bool operator==(const CategoricalStep&, const CategoricalStep&) = default;
};

/// Maps normalized buffer distance to feature presence probability.
struct UncertaintyModel {
    UncertaintyKind kind = UncertaintyKind::curve;
    std::vector<CategoricalStep> steps;  // categorical only

    static UncertaintyModel curve();
    static UncertaintyModel linear();
    static UncertaintyModel certain();
    static UncertaintyModel categorical(std::vector<CategoricalStep> steps);
    /// Steps 1.0 / 0.75 / 0.5 / 0.25 over four equal distance bands.
    static UncertaintyModel default_categorical();

    /// Accepts "curve", "linear", "categorical", "certain".
    static UncertaintyModel parse(const std::string& name);
    std::string name() const;

    void validate() const;
};

/// Presence probability at normalized distance x in [0,1]. Curve model is
/// cos(pi*x)/2 + 0.5, linear is 1-x, certain is 1. Throws ValidationError
/// for x outside [0,1]; callers map "outside the buffer" to absence before
/// getting here.
double presence_probability(const UncertaintyModel& model, double x);

}  // namespace coloc
