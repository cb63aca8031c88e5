// Copyright 2026 The fskill Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Bundled open word lists. Each *_lexicon constant is written in the
// category-lexicon file format so it goes through the same parser as
// user-supplied files.

#include <array>
#include <string_view>
#include <utility>

namespace fskill::resources {

// Function words used by the English-detection heuristic.
inline constexpr std::array<std::string_view, 200> kEnglishFunctionWords = {
    "a", "about", "above", "across", "after", "again", "against", "all", "almost", "along",
    "also", "although", "always", "am", "among", "an", "and", "another", "any", "anyone",
    "anything", "are", "around", "as", "at", "away", "be", "because", "been", "before",
    "being", "below", "between", "both", "but", "by", "can", "cannot", "could", "did",
    "do", "does", "doing", "done", "down", "during", "each", "either", "enough", "even",
    "ever", "every", "few", "for", "from", "further", "had", "has", "have", "having",
    "he", "her", "here", "hers", "herself", "him", "himself", "his", "how", "however",
    "i", "if", "in", "inside", "instead", "into", "is", "it", "its", "itself",
    "just", "least", "less", "like", "many", "may", "me", "might", "mine", "more",
    "most", "much", "must", "my", "myself", "neither", "never", "no", "nobody", "none",
    "nor", "not", "nothing", "now", "of", "off", "often", "on", "once", "one",
    "only", "onto", "or", "other", "others", "otherwise", "our", "ours", "ourselves", "out",
    "over", "own", "perhaps", "quite", "rather", "really", "same", "several", "shall", "she",
    "should", "since", "so", "some", "someone", "something", "still", "such", "than", "that",
    "the", "their", "theirs", "them", "themselves", "then", "there", "these", "they", "this",
    "those", "though", "through", "throughout", "thus", "to", "together", "too", "toward", "towards",
    "under", "unless", "until", "up", "upon", "us", "very", "was", "we", "well",
    "were", "what", "whatever", "when", "whenever", "where", "whereas", "whether", "which", "while",
    "who", "whoever", "whom", "whose", "why", "will", "with", "within", "without", "would",
    "yet", "you", "your", "yours", "yourself", "yourselves", "already", "hence", "indeed", "therefore",
};

// Abbreviations whose trailing period never ends a sentence.
inline constexpr std::array<std::string_view, 47> kAbbreviations = {
    "mr.", "mrs.", "ms.", "dr.", "prof.", "sr.", "jr.", "st.", "vs.", "etc.",
    "e.g.", "i.e.", "inc.", "ltd.", "co.", "corp.", "jan.", "feb.", "mar.", "apr.",
    "jun.", "jul.", "aug.", "sep.", "sept.", "oct.", "nov.", "dec.", "u.s.", "u.k.",
    "u.n.", "u.s.a.", "e.u.", "a.m.", "p.m.", "no.", "gov.", "gen.", "sen.", "rep.",
    "est.", "approx.", "dept.", "fig.", "al.", "mt.", "ft.",
};

inline constexpr std::array<std::string_view, 5> kFirstPersonPronouns = {
    "i", "me", "mine", "my", "myself",
};

inline constexpr std::array<std::string_view, 29> kPronouns = {
    "you", "your", "yours", "yourself", "yourselves", "he", "him", "his", "himself", "she",
    "her", "hers", "herself", "it", "its", "itself", "we", "us", "our", "ours",
    "ourselves", "they", "them", "their", "theirs", "themselves", "oneself", "thee", "thou",
};

inline constexpr std::array<std::string_view, 68> kPrepositions = {
    "about", "above", "across", "after", "against", "along", "amid", "amidst", "among", "amongst",
    "around", "as", "at", "atop", "before", "behind", "below", "beneath", "beside", "besides",
    "between", "beyond", "by", "concerning", "despite", "down", "during", "except", "excluding", "following",
    "for", "from", "in", "including", "inside", "into", "like", "near", "of", "off",
    "on", "onto", "opposite", "out", "outside", "over", "past", "per", "regarding", "since",
    "than", "through", "throughout", "till", "toward", "towards", "under", "underneath", "unlike", "until",
    "unto", "up", "upon", "versus", "via", "with", "within", "without",
};

inline constexpr std::array<std::string_view, 34> kNumberWords = {
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
    "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen", "nineteen",
    "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety", "hundred", "thousand",
    "million", "billion", "trillion", "dozen",
};

// Frequent open-class words; suffix rules cover the rest.
inline constexpr std::array<std::string_view, 311> kCommonVerbs = {
    "is", "are", "was", "were", "be", "been", "being", "am", "have", "has",
    "had", "do", "does", "did", "say", "says", "said", "get", "gets", "got",
    "make", "makes", "made", "go", "goes", "went", "gone", "know", "knows", "knew",
    "known", "take", "takes", "took", "taken", "see", "sees", "saw", "seen", "come",
    "comes", "came", "think", "thinks", "thought", "look", "looks", "looked", "want", "wants",
    "wanted", "give", "gives", "gave", "given", "use", "uses", "used", "find", "finds",
    "found", "tell", "tells", "told", "ask", "asks", "asked", "work", "works", "worked",
    "seem", "seems", "seemed", "feel", "feels", "felt", "try", "tries", "tried", "leave",
    "leaves", "left", "call", "calls", "called", "keep", "keeps", "kept", "let", "lets",
    "begin", "begins", "began", "show", "shows", "showed", "shown", "hear", "hears", "heard",
    "play", "plays", "played", "run", "runs", "ran", "move", "moves", "moved", "live",
    "lives", "lived", "believe", "believes", "believed", "hold", "holds", "held", "bring", "brings",
    "brought", "happen", "happens", "happened", "write", "writes", "wrote", "written", "provide", "provides",
    "provided", "sit", "sits", "sat", "stand", "stands", "stood", "lose", "loses", "lost",
    "pay", "pays", "paid", "meet", "meets", "met", "include", "includes", "included", "continue",
    "continues", "continued", "set", "sets", "learn", "learns", "learned", "change", "changes", "changed",
    "lead", "leads", "led", "understand", "understands", "understood", "watch", "watches", "watched", "follow",
    "follows", "followed", "stop", "stops", "stopped", "create", "creates", "created", "speak", "speaks",
    "spoke", "read", "reads", "allow", "allows", "allowed", "add", "adds", "added", "spend",
    "spends", "spent", "grow", "grows", "grew", "open", "opens", "opened", "walk", "walks",
    "walked", "win", "wins", "won", "offer", "offers", "offered", "remember", "remembers", "remembered",
    "consider", "considers", "considered", "appear", "appears", "appeared", "buy", "buys", "bought", "wait",
    "waits", "waited", "serve", "serves", "served", "die", "dies", "died", "send", "sends",
    "sent", "expect", "expects", "expected", "build", "builds", "built", "stay", "stays", "stayed",
    "fall", "falls", "fell", "cut", "cuts", "reach", "reaches", "reached", "kill", "kills",
    "killed", "remain", "remains", "remained", "suggest", "suggests", "suggested", "raise", "raises", "raised",
    "pass", "passes", "passed", "sell", "sells", "sold", "require", "requires", "required", "report",
    "reports", "reported", "decide", "decides", "decided", "pull", "pulls", "pulled", "visit", "visits",
    "visited", "fire", "fires", "fired", "vote", "votes", "voted", "agree", "agrees", "agreed",
    "announce", "announces", "announced", "sign", "signs", "signed", "fail", "fails", "failed", "rise",
    "rises", "rose", "become", "becomes", "became", "increase", "increases", "increased", "reduce", "reduces",
    "reduced",
};

inline constexpr std::array<std::string_view, 157> kCommonNouns = {
    "time", "year", "people", "way", "day", "man", "thing", "woman", "life", "child",
    "world", "school", "state", "family", "student", "group", "country", "problem", "hand", "part",
    "place", "case", "week", "company", "system", "program", "question", "government", "number", "night",
    "point", "home", "water", "room", "mother", "area", "money", "story", "fact", "month",
    "lot", "right", "study", "book", "eye", "job", "word", "business", "issue", "side",
    "kind", "head", "house", "service", "friend", "father", "power", "hour", "game", "line",
    "end", "member", "law", "car", "city", "community", "name", "president", "team", "minute",
    "idea", "kid", "body", "information", "back", "parent", "face", "others", "level", "office",
    "door", "health", "person", "art", "war", "history", "party", "result", "morning", "reason",
    "research", "girl", "guy", "moment", "air", "teacher", "force", "education", "election", "market",
    "leader", "deal", "economy", "policy", "price", "rate", "candidate", "border", "treaty", "missile",
    "summit", "agreement", "talks", "sanction", "sanctions", "trade", "tariff", "parliament", "court", "news",
    "deadline", "chance", "event", "evidence", "trend", "forecast", "outcome", "percent", "partition", "regime",
    "army", "nation", "region", "conflict", "crisis", "budget", "data", "poll", "polls", "campaign",
    "measure", "minister", "military", "troops", "official", "officials", "decision", "support", "pressure", "nuclear",
    "weapons", "weapon", "test", "tests", "peace", "referendum", "majority",
};

inline constexpr std::array<std::string_view, 6> kNegators = {
    "not", "n't", "no", "never", "neither", "nor",
};

inline constexpr std::array<std::pair<std::string_view, double>, 24> kIntensifiers = {{
    {"very", 1.25},
    {"really", 1.25},
    {"extremely", 1.5},
    {"highly", 1.25},
    {"so", 1.2},
    {"too", 1.2},
    {"quite", 1.1},
    {"incredibly", 1.5},
    {"most", 1.3},
    {"more", 1.2},
    {"totally", 1.4},
    {"completely", 1.4},
    {"absolutely", 1.5},
    {"truly", 1.2},
    {"deeply", 1.3},
    {"slightly", 0.75},
    {"somewhat", 0.8},
    {"barely", 0.6},
    {"hardly", 0.6},
    {"rather", 0.9},
    {"fairly", 0.9},
    {"less", 0.8},
    {"little", 0.7},
    {"mildly", 0.75},
}};

inline constexpr std::string_view kHedgeLexicon = R"lex(# hedge cues; a sentence containing any of them is uncertain
may	hedge
might	hedge
could	hedge
perhaps	hedge
possibly	hedge
probably	hedge
likely	hedge
unlikely	hedge
seems	hedge
appears	hedge
suggest*	hedge
expect*	hedge
uncertain*	hedge
chance	hedge
unclear	hedge
doubt*	hedge
assume*	hedge
speculat*	hedge
)lex";

inline constexpr std::string_view kTentativeLexicon = R"lex(# tentative language
maybe	tentative
perhaps	tentative
possibly	tentative
possible	tentative
probably	tentative
probable	tentative
guess	tentative
guessed	tentative
guessing	tentative
hope	tentative
hoped	tentative
hoping	tentative
seem*	tentative
appear*	tentative
almost	tentative
apparently	tentative
somewhat	tentative
sometimes	tentative
suppos*	tentative
tentativ*	tentative
unsure	tentative
unclear	tentative
uncertain*	tentative
dunno	tentative
depend	tentative
depends	tentative
depending	tentative
doubt*	tentative
hypothes*	tentative
if	tentative
or	tentative
someday	tentative
somehow	tentative
something	tentative
sort	tentative
kinda	tentative
lean*	tentative
question*	tentative
random*	tentative
vague*	tentative
wonder*	tentative
chance	tentative
any	tentative
anything	tentative
anyhow	tentative
fairly	tentative
potential*	tentative
approximate*	tentative
roughly	tentative
)lex";

inline constexpr std::string_view kTemporalLexicon = R"lex(# temporal orientation
ago	focuspast
talked	focuspast
said	focuspast
was	focuspast
were	focuspast
had	focuspast
did	focuspast
been	focuspast
went	focuspast
came	focuspast
became	focuspast
told	focuspast
thought	focuspast
felt	focuspast
knew	focuspast
saw	focuspast
took	focuspast
made	focuspast
gave	focuspast
found	focuspast
got	focuspast
began	focuspast
left	focuspast
used	focuspast
wanted	focuspast
asked	focuspast
seemed	focuspast
tried	focuspast
called	focuspast
previously	focuspast
earlier	focuspast
formerly	focuspast
once	focuspast
yesterday	focuspast
last	focuspast
lasted	focuspast
past	focuspast
history	focuspast
historically	focuspast
happened	focuspast
occurred	focuspast
decided	focuspast
agreed	focuspast
announced	focuspast
voted	focuspast
signed	focuspast
failed	focuspast
remained	focuspast
reported	focuspast
launched	focuspast
visited	focuspast
stepped	focuspast
already	focuspast
recently	focuspast
since	focuspast
before	focuspast
is	focuspresent
are	focuspresent
am	focuspresent
now	focuspresent
today	focuspresent
currently	focuspresent
present	focuspresent
presently	focuspresent
nowadays	focuspresent
does	focuspresent
do	focuspresent
has	focuspresent
have	focuspresent
being	focuspresent
seems	focuspresent
appears	focuspresent
remains	focuspresent
stands	focuspresent
continues	focuspresent
exists	focuspresent
holds	focuspresent
means	focuspresent
shows	focuspresent
says	focuspresent
thinks	focuspresent
believes	focuspresent
looks	focuspresent
feels	focuspresent
knows	focuspresent
wants	focuspresent
needs	focuspresent
ongoing	focuspresent
current	focuspresent
existing	focuspresent
yet	focuspresent
still	focuspresent
this	focuspresent
these	focuspresent
here	focuspresent
instantly	focuspresent
immediate	focuspresent
immediately	focuspresent
lately	focuspresent
tonight	focuspresent
meanwhile	focuspresent
will	focusfuture
'll	focusfuture
shall	focusfuture
soon	focusfuture
tomorrow	focusfuture
future	focusfuture
upcoming	focusfuture
eventually	focusfuture
later	focusfuture
next	focusfuture
gonna	focusfuture
going	focusfuture
intend*	focusfuture
plan	focusfuture
plans	focusfuture
planned	focusfuture
planning	focusfuture
expected	focusfuture
forthcoming	focusfuture
hereafter	focusfuture
impending	focusfuture
imminent	focusfuture
someday	focusfuture
anticipat*	focusfuture
predict*	focusfuture
forecast*	focusfuture
prospect*	focusfuture
would	focusfuture
won't	focusfuture
wont	focusfuture
tomorrow's	focusfuture
coming	focusfuture
ahead	focusfuture
await*	focusfuture
pending	focusfuture
potential	focusfuture
eventual	focusfuture
shortly	focusfuture
afterward	focusfuture
afterwards	focusfuture
)lex";

inline constexpr std::string_view kSentimentLexicon = R"lex(# semantic orientation scores in [-5, 5]
good	sentiment	3
great	sentiment	4
excellent	sentiment	5
amazing	sentiment	5
wonderful	sentiment	4
best	sentiment	4
better	sentiment	2
positive	sentiment	2
happy	sentiment	3
glad	sentiment	2
strong	sentiment	2
success	sentiment	3
successful	sentiment	3
win	sentiment	2
wins	sentiment	2
won	sentiment	2
hope	sentiment	1
hopeful	sentiment	2
love	sentiment	4
like	sentiment	1
nice	sentiment	2
fantastic	sentiment	5
brilliant	sentiment	4
impressive	sentiment	3
optimistic	sentiment	2
favorable	sentiment	2
beneficial	sentiment	2
improve	sentiment	2
improved	sentiment	2
improvement	sentiment	2
progress	sentiment	2
stable	sentiment	1
peace	sentiment	2
peaceful	sentiment	2
safe	sentiment	2
secure	sentiment	1
support	sentiment	1
agree	sentiment	1
fair	sentiment	1
helpful	sentiment	2
easy	sentiment	1
clear	sentiment	1
confident	sentiment	2
promising	sentiment	2
remarkable	sentiment	3
superb	sentiment	5
terrific	sentiment	4
awesome	sentiment	4
perfect	sentiment	4
glorious	sentiment	4
thrilled	sentiment	4
delighted	sentiment	4
pleased	sentiment	3
welcome	sentiment	2
boost	sentiment	2
gain	sentiment	1
gains	sentiment	1
healthy	sentiment	2
prosper	sentiment	3
prosperous	sentiment	3
robust	sentiment	2
solid	sentiment	1
thriving	sentiment	3
victory	sentiment	3
bad	sentiment	-3
terrible	sentiment	-5
awful	sentiment	-5
horrible	sentiment	-5
worst	sentiment	-5
worse	sentiment	-3
poor	sentiment	-3
negative	sentiment	-2
sad	sentiment	-3
angry	sentiment	-3
fear	sentiment	-3
afraid	sentiment	-3
crisis	sentiment	-3
disaster	sentiment	-5
fail	sentiment	-3
failed	sentiment	-3
failure	sentiment	-3
lose	sentiment	-2
loss	sentiment	-2
losses	sentiment	-2
lost	sentiment	-2
war	sentiment	-3
threat	sentiment	-3
threats	sentiment	-3
attack	sentiment	-3
attacks	sentiment	-3
violence	sentiment	-4
violent	sentiment	-4
danger	sentiment	-3
dangerous	sentiment	-3
risk	sentiment	-1
risky	sentiment	-2
weak	sentiment	-2
problem	sentiment	-2
problems	sentiment	-2
trouble	sentiment	-2
chaos	sentiment	-4
corrupt	sentiment	-4
corruption	sentiment	-4
crazy	sentiment	-3
stupid	sentiment	-4
ridiculous	sentiment	-3
hate	sentiment	-4
hostile	sentiment	-3
collapse	sentiment	-4
decline	sentiment	-2
unstable	sentiment	-2
scandal	sentiment	-3
disappointing	sentiment	-3
pathetic	sentiment	-4
absurd	sentiment	-3
dreadful	sentiment	-4
catastrophic	sentiment	-5
grim	sentiment	-3
bleak	sentiment	-3
tragic	sentiment	-4
harsh	sentiment	-2
ugly	sentiment	-3
)lex";

inline constexpr std::string_view kFinancialLexicon = R"lex(# financial sentiment polarity
able	positive
abundance	positive
achieve	positive
achieved	positive
achievement	positive
advantage	positive
advantageous	positive
attractive	positive
beat	positive
beneficial	positive
benefit	positive
benefits	positive
better	positive
boost	positive
boosted	positive
breakthrough	positive
confident	positive
creative	positive
delight	positive
delighted	positive
dependable	positive
despite	positive
effective	positive
efficiency	positive
efficient	positive
enable	positive
enhance	positive
enhanced	positive
excellent	positive
exceptional	positive
favorable	positive
gain	positive
gained	positive
gains	positive
good	positive
great	positive
greater	positive
greatest	positive
improve	positive
improved	positive
improvement	positive
improvements	positive
impressive	positive
increase	positive
innovative	positive
leadership	positive
lucrative	positive
opportunities	positive
opportunity	positive
optimistic	positive
outperform	positive
outperformed	positive
outstanding	positive
positive	positive
profitable	positive
profitability	positive
progress	positive
prosperity	positive
rebound	positive
record	positive
resilient	positive
rewarding	positive
robust	positive
satisfactory	positive
solid	positive
stability	positive
stable	positive
strength	positive
strengthen	positive
strong	positive
stronger	positive
strongest	positive
succeed	positive
success	positive
successful	positive
superior	positive
surpass	positive
surpassed	positive
upturn	positive
adverse	negative
against	negative
bankruptcy	negative
challenge	negative
challenged	negative
challenges	negative
challenging	negative
closure	negative
concern	negative
concerns	negative
decline	negative
declined	negative
declines	negative
declining	negative
decrease	negative
decreased	negative
deficit	negative
delay	negative
delayed	negative
deteriorate	negative
deteriorated	negative
deterioration	negative
difficult	negative
difficulty	negative
disappoint	negative
disappointed	negative
disappointing	negative
downgrade	negative
downgraded	negative
downturn	negative
drop	negative
dropped	negative
fail	negative
failed	negative
failure	negative
impairment	negative
lawsuit	negative
litigation	negative
loss	negative
losses	negative
lower	negative
negative	negative
negatively	negative
penalty	negative
poor	negative
problem	negative
problems	negative
recession	negative
restructuring	negative
risk	negative
risks	negative
shortfall	negative
slowdown	negative
slump	negative
terminated	negative
threat	negative
unfavorable	negative
volatile	negative
volatility	negative
weak	negative
weaken	negative
weakened	negative
weakness	negative
worse	negative
worsen	negative
worst	negative
writedown	negative
)lex";

inline constexpr std::string_view kConnectiveLexicon = R"lex(# discourse connectives
however	comparison
but	comparison
although	comparison
though	comparison
whereas	comparison
while	comparison
yet	comparison
nevertheless	comparison
nonetheless	comparison
conversely	comparison
instead	comparison
rather	comparison
still	comparison
despite	comparison
unlike	comparison
similarly	comparison
likewise	comparison
alternatively	comparison
notwithstanding	comparison
even though	comparison
on the other hand	comparison
in contrast	comparison
by contrast	comparison
on the contrary	comparison
even if	comparison
in comparison	comparison
because	contingency
since	contingency
so	contingency
therefore	contingency
thus	contingency
hence	contingency
consequently	contingency
if	contingency
unless	contingency
accordingly	contingency
thereby	contingency
otherwise	contingency
as a result	contingency
so that	contingency
in order to	contingency
due to	contingency
given that	contingency
provided that	contingency
as long as	contingency
for this reason	contingency
in that case	contingency
because of	contingency
and	expansion
also	expansion
moreover	expansion
furthermore	expansion
additionally	expansion
besides	expansion
indeed	expansion
specifically	expansion
namely	expansion
especially	expansion
particularly	expansion
or	expansion
except	expansion
for example	expansion
for instance	expansion
in addition	expansion
in fact	expansion
in particular	expansion
in other words	expansion
that is	expansion
as well	expansion
as well as	expansion
not only	expansion
in short	expansion
in general	expansion
overall	expansion
then	temporal
after	temporal
before	temporal
when	temporal
until	temporal
meanwhile	temporal
finally	temporal
previously	temporal
subsequently	temporal
afterward	temporal
afterwards	temporal
eventually	temporal
once	temporal
later	temporal
earlier	temporal
now	temporal
initially	temporal
at the same time	temporal
in the meantime	temporal
by then	temporal
as soon as	temporal
so far	temporal
at first	temporal
in the end	temporal
ever since	temporal
next	temporal
)lex";

inline constexpr std::string_view kAnalyticLexicon = R"lex(# function-word categories for the analytic-thinking proxy
a	article
an	article
the	article
about	preposition
above	preposition
across	preposition
after	preposition
against	preposition
along	preposition
amid	preposition
amidst	preposition
among	preposition
amongst	preposition
around	preposition
as	preposition
at	preposition
atop	preposition
before	preposition
behind	preposition
below	preposition
beneath	preposition
beside	preposition
besides	preposition
between	preposition
beyond	preposition
by	preposition
concerning	preposition
despite	preposition
down	preposition
during	preposition
except	preposition
excluding	preposition
following	preposition
for	preposition
from	preposition
in	preposition
including	preposition
inside	preposition
into	preposition
like	preposition
near	preposition
of	preposition
off	preposition
on	preposition
onto	preposition
opposite	preposition
out	preposition
outside	preposition
over	preposition
past	preposition
per	preposition
regarding	preposition
since	preposition
than	preposition
through	preposition
throughout	preposition
till	preposition
toward	preposition
towards	preposition
under	preposition
underneath	preposition
unlike	preposition
until	preposition
unto	preposition
up	preposition
upon	preposition
versus	preposition
via	preposition
with	preposition
within	preposition
without	preposition
i	pronoun
me	pronoun
mine	pronoun
my	pronoun
myself	pronoun
you	pronoun
your	pronoun
yours	pronoun
yourself	pronoun
yourselves	pronoun
he	pronoun
him	pronoun
his	pronoun
himself	pronoun
she	pronoun
her	pronoun
hers	pronoun
herself	pronoun
it	pronoun
its	pronoun
itself	pronoun
we	pronoun
us	pronoun
our	pronoun
ours	pronoun
ourselves	pronoun
they	pronoun
them	pronoun
their	pronoun
theirs	pronoun
themselves	pronoun
oneself	pronoun
thee	pronoun
thou	pronoun
am	auxverb
are	auxverb
is	auxverb
was	auxverb
were	auxverb
be	auxverb
been	auxverb
being	auxverb
have	auxverb
has	auxverb
had	auxverb
do	auxverb
does	auxverb
did	auxverb
will	auxverb
would	auxverb
shall	auxverb
should	auxverb
can	auxverb
could	auxverb
may	auxverb
might	auxverb
must	auxverb
not	negation
n't	negation
no	negation
never	negation
neither	negation
nor	negation
none	negation
nothing	negation
nobody	negation
nowhere	negation
cannot	negation
)lex";

}  // namespace fskill::resources
