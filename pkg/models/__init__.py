# Persistence and report models
