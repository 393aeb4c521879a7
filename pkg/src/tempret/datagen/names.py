# ABOUTME: Fixed pools of invented player names and set scores for synthetic event tables.
# ABOUTME: Changing any entry changes every generated dataset, so treat the pools as fixture data.

FIRST_NAMES = (
    "Ada", "Bruno", "Celia", "Dario", "Elin", "Farid", "Greta", "Hugo",
    "Ines", "Jonas", "Kira", "Lucan", "Mira", "Nils", "Odile", "Pavel",
    "Quinn", "Rosa", "Soren", "Tilda", "Ugo", "Vera", "Wim", "Xenia",
    "Yann", "Zora", "Anouk", "Bastian", "Cosima", "Dag", "Edda", "Florin",
)

LAST_NAMES = (
    "Almqvist", "Brandauer", "Castellano", "Dunmore", "Eskildsen", "Ferrante",
    "Grobler", "Halvorsen", "Ilieva", "Jaroslav", "Kestner", "Lindahl",
    "Marchetti", "Novak-Reyes", "Oyelaran", "Pellegrin", "Quaresma", "Rautio",
    "Stavros", "Thornbury", "Udovic", "Valdemar", "Wexler", "Ystad",
    "Zamora", "Achterberg", "Blomqvist", "Corvina", "Drummond", "Egervari",
    "Falkenrath", "Gulbrandsen",
)

# Sets won by the eventual winner; the loser's sets are the same scores reversed.
WINNING_SETS = ("6-0", "6-1", "6-2", "6-3", "6-4", "7-5", "7-6")

# Earlier rounds of a 128 draw, latest first, with their match counts and the
# days between that round and the final.
ROUNDS = (
    ("semifinal", 2, 2),
    ("quarterfinal", 4, 4),
    ("fourth round", 8, 6),
    ("third round", 16, 8),
    ("second round", 32, 10),
    ("first round", 64, 12),
)
