#include "numero/event.hpp"

#include <gtest/gtest.h>

#include "numero/random_events.hpp"

namespace numero {
namespace {

FiniteSpacePtr space() {
    static const FiniteSpacePtr s =
        std::make_shared<const FiniteSpace>(std::vector<std::string>{"a", "b", "c", "d"});
    return s;
}

TEST(FiniteSpace, LabelValidation) {
    EXPECT_THROW(FiniteSpace(std::vector<std::string>{}), ValidationError);
    EXPECT_THROW(FiniteSpace({"a", "a"}), ValidationError);
    EXPECT_THROW(FiniteSpace({"a", ""}), ValidationError);
    std::vector<std::string> many;
    for (int i = 0; i < 65; ++i) many.push_back("x" + std::to_string(i));
    EXPECT_THROW(FiniteSpace{many}, ValidationError);

    EXPECT_EQ(space()->size(), 4u);
    EXPECT_EQ(space()->index_of("c"), 2u);
    EXPECT_TRUE(space()->has_label("d"));
    EXPECT_FALSE(space()->has_label("z"));
    EXPECT_THROW(space()->index_of("z"), ValidationError);
}

TEST(FiniteEvent, SetAlgebra) {
    FiniteEvent ab = FiniteEvent::of(space(), {"a", "b"});
    FiniteEvent bc = FiniteEvent::of(space(), {"b", "c"});
    EXPECT_EQ(ab | bc, FiniteEvent::of(space(), {"a", "b", "c"}));
    EXPECT_EQ(ab & bc, FiniteEvent::of(space(), {"b"}));
    EXPECT_EQ(ab - bc, FiniteEvent::of(space(), {"a"}));
    EXPECT_EQ(~ab, FiniteEvent::of(space(), {"c", "d"}));
    EXPECT_EQ(ab.cardinality(), 2u);
    EXPECT_TRUE(ab.contains("a"));
    EXPECT_FALSE(ab.contains("c"));
    EXPECT_TRUE((ab & bc).is_subset_of(ab));
    EXPECT_EQ(ab.members(), (std::vector<std::string>{"a", "b"}));
    EXPECT_THROW(FiniteEvent::of(space(), {"z"}), ValidationError);
    EXPECT_THROW(FiniteEvent::from_mask(space(), 1u << 5), ValidationError);
}

TEST(FiniteEvent, SpacesComparedByContent) {
    auto other = std::make_shared<const FiniteSpace>(std::vector<std::string>{"a", "b", "c", "d"});
    FiniteEvent x = FiniteEvent::of(space(), {"a"});
    FiniteEvent y = FiniteEvent::of(other, {"a"});
    EXPECT_EQ(x, y);
    EXPECT_EQ((x | y), x);
    auto different = std::make_shared<const FiniteSpace>(std::vector<std::string>{"a", "b"});
    FiniteEvent z = FiniteEvent::of(different, {"a"});
    EXPECT_THROW((void)(x | z), ModelMismatchError);
    EXPECT_FALSE(x == z);
}

TEST(Event, ModelDispatch) {
    Event coin = Event(CoinEvent::cylinder({{1, 'H'}}));
    Event interval = Event(IntervalEvent::interval(Rational(0), Rational(1)));
    Event finite = Event(FiniteEvent::of(space(), {"a"}));
    EXPECT_EQ(model_of(coin), Model::coin);
    EXPECT_EQ(model_of(interval), Model::interval);
    EXPECT_EQ(model_of(finite), Model::finite);
    EXPECT_EQ(model_name(Model::coin), "coin");
    EXPECT_EQ(model_name(Model::interval), "interval");
    EXPECT_EQ(model_name(Model::finite), "finite");
}

TEST(Event, MixedModelsRejected) {
    Event coin = Event(CoinEvent::omega());
    Event interval = Event(IntervalEvent::interval(Rational(0), Rational(1)));
    EXPECT_THROW(event_union(coin, interval), ModelMismatchError);
    EXPECT_THROW(event_intersect(interval, coin), ModelMismatchError);
    EXPECT_THROW(event_difference(coin, interval), ModelMismatchError);
    EXPECT_THROW(event_is_subset(coin, interval), ModelMismatchError);
    EXPECT_THROW(event_is_equal(interval, coin), ModelMismatchError);
    // Point variant must match the event's model too.
    EXPECT_THROW(event_contains(coin, Point(Rational(1))), ModelMismatchError);
    EXPECT_THROW(event_contains(interval, Point(CoinPoint("H", 'T'))), ModelMismatchError);
}

TEST(Event, IntervalComplementUnsupported) {
    Event interval = Event(IntervalEvent::interval(Rational(0), Rational(1)));
    EXPECT_THROW(event_complement(interval), DomainError);
    EXPECT_NO_THROW(event_complement(Event(CoinEvent::omega())));
    EXPECT_NO_THROW(event_complement(Event(FiniteEvent::of(space(), {"a"}))));
}

TEST(Event, GenericOperationsMatchUnderlying) {
    Rng rng(29);
    for (Model model : {Model::coin, Model::interval, Model::finite}) {
        for (int i = 0; i < 100; ++i) {
            Event a = random_event(rng, model, space());
            Event b = random_event(rng, model, space());
            Event u = event_union(a, b);
            event_validate(u);
            EXPECT_TRUE(event_is_subset(a, u));
            EXPECT_TRUE(event_is_subset(event_intersect(a, b), a));
            EXPECT_TRUE(event_is_equal(event_normalize(u), u));
            EXPECT_EQ(event_is_empty(event_difference(a, a)), true);
        }
    }
}

} // namespace
} // namespace numero
