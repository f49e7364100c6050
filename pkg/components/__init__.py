# console summaries
